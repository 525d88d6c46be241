#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "deepfmea/entities.hpp"

namespace deepfmea {

struct HierarchyViolation {
    Id element_id;  // offending element; empty when the rule concerns the whole set
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<HierarchyViolation> violations;
};

// Checks the tree invariants: unique ids, exactly one root, resolvable
// parents, no cycles, sibling names unique. Violations are data, not errors.
ValidationReport validate_hierarchy(const std::vector<SystemElement>& elements);

// Child index over a validated element set.
class Hierarchy {
public:
    explicit Hierarchy(const std::vector<SystemElement>& elements);

    const Id& root_id() const { return root_id_; }
    bool contains(const Id& id) const { return nodes_.count(id) > 0; }
    const std::vector<Id>& children(const Id& id) const;
    const SystemElement& element(const Id& id) const;

    // The element and all of its descendants.
    std::set<Id> resolve_subtree(const Id& element_id) const;

    // True when ancestor_id lies on the path from element_id to the root
    // (an element is its own ancestor).
    bool is_ancestor_or_self(const Id& ancestor_id, const Id& element_id) const;

    // Root-to-element id path, for human-readable reports.
    std::vector<Id> path_from_root(const Id& element_id) const;

private:
    std::map<Id, SystemElement> nodes_;
    std::map<Id, std::vector<Id>> children_;
    Id root_id_;
};

// Signals whose element references intersect the subtree closure of the
// scope. Empty scope selects nothing.
std::set<Id> signals_for_scope(const Hierarchy& hierarchy,
                               const std::vector<Signal>& signals,
                               const std::set<Id>& scope_element_ids);

}  // namespace deepfmea
