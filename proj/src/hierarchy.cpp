#include "deepfmea/hierarchy.hpp"

#include <algorithm>
#include <functional>

namespace deepfmea {

ValidationReport validate_hierarchy(const std::vector<SystemElement>& elements) {
    ValidationReport report;
    auto flag = [&](const Id& id, std::string rule, std::string detail) {
        report.ok = false;
        report.violations.push_back({id, std::move(rule), std::move(detail)});
    };

    std::map<Id, const SystemElement*> by_id;
    for (const auto& e : elements) {
        if (e.id.empty()) flag(e.id, "empty-id", "element with empty id");
        auto [it, inserted] = by_id.emplace(e.id, &e);
        if (!inserted) flag(e.id, "duplicate-id", "id '" + e.id + "' used more than once");
    }

    std::vector<Id> roots;
    for (const auto& e : elements) {
        if (!e.parent_id) {
            roots.push_back(e.id);
        } else if (*e.parent_id == e.id) {
            flag(e.id, "cycle", "element '" + e.id + "' is its own parent");
        } else if (!by_id.count(*e.parent_id)) {
            flag(e.id, "unknown-parent",
                 "element '" + e.id + "' references missing parent '" + *e.parent_id + "'");
        }
    }
    if (roots.empty() && !elements.empty()) {
        flag("", "no-root", "no element without a parent");
    } else if (roots.size() > 1) {
        for (const auto& id : roots)
            flag(id, "multiple-roots", "more than one element without a parent");
    }

    // Walk parent chains; revisiting a node within one walk means a cycle.
    std::map<Id, int> state;  // 0 unvisited, 1 on current chain, 2 done
    for (const auto& e : elements) {
        std::vector<Id> chain;
        const SystemElement* cur = &e;
        while (cur && state[cur->id] == 0) {
            state[cur->id] = 1;
            chain.push_back(cur->id);
            if (!cur->parent_id) break;
            auto it = by_id.find(*cur->parent_id);
            cur = (it == by_id.end()) ? nullptr : it->second;
            if (cur && state[cur->id] == 1) {
                flag(cur->id, "cycle", "parent chain through '" + cur->id + "' loops back on itself");
                break;
            }
        }
        for (const auto& id : chain) state[id] = 2;
    }

    std::map<std::pair<Id, std::string>, int> sibling_names;
    for (const auto& e : elements) {
        Id parent = e.parent_id.value_or("");
        if (++sibling_names[{parent, e.name}] == 2)
            flag(e.id, "duplicate-sibling-name",
                 "name '" + e.name + "' used twice under the same parent");
    }

    return report;
}

Hierarchy::Hierarchy(const std::vector<SystemElement>& elements) {
    auto report = validate_hierarchy(elements);
    if (!report.ok) {
        std::string detail = report.violations.empty() ? "" : report.violations.front().detail;
        fail("invalid-hierarchy", "element set is not a tree: " + detail);
    }
    for (const auto& e : elements) {
        nodes_[e.id] = e;
        if (e.parent_id)
            children_[*e.parent_id].push_back(e.id);
        else
            root_id_ = e.id;
    }
    for (auto& [id, kids] : children_) std::sort(kids.begin(), kids.end());
}

const std::vector<Id>& Hierarchy::children(const Id& id) const {
    static const std::vector<Id> none;
    auto it = children_.find(id);
    return it == children_.end() ? none : it->second;
}

const SystemElement& Hierarchy::element(const Id& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) fail("unknown-id", "unknown system element '" + id + "'");
    return it->second;
}

std::set<Id> Hierarchy::resolve_subtree(const Id& element_id) const {
    element(element_id);  // raises on unknown ids
    std::set<Id> out;
    std::vector<Id> stack{element_id};
    while (!stack.empty()) {
        Id cur = stack.back();
        stack.pop_back();
        if (!out.insert(cur).second) continue;
        for (const auto& child : children(cur)) stack.push_back(child);
    }
    return out;
}

bool Hierarchy::is_ancestor_or_self(const Id& ancestor_id, const Id& element_id) const {
    const SystemElement* cur = &element(element_id);
    while (true) {
        if (cur->id == ancestor_id) return true;
        if (!cur->parent_id) return false;
        cur = &element(*cur->parent_id);
    }
}

std::vector<Id> Hierarchy::path_from_root(const Id& element_id) const {
    std::vector<Id> path;
    const SystemElement* cur = &element(element_id);
    while (true) {
        path.push_back(cur->id);
        if (!cur->parent_id) break;
        cur = &element(*cur->parent_id);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::set<Id> signals_for_scope(const Hierarchy& hierarchy,
                               const std::vector<Signal>& signals,
                               const std::set<Id>& scope_element_ids) {
    std::set<Id> closure;
    for (const auto& id : scope_element_ids) {
        auto sub = hierarchy.resolve_subtree(id);
        closure.insert(sub.begin(), sub.end());
    }
    std::set<Id> out;
    for (const auto& signal : signals) {
        for (const auto& eid : signal.element_ids) {
            if (closure.count(eid)) {
                out.insert(signal.id);
                break;
            }
        }
    }
    return out;
}

}  // namespace deepfmea
