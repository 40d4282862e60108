// Internal lazy-cache storage shared by group.cpp / subgroup.cpp /
// character.cpp.  Guarded by Group::mu_.
#pragma once

#include "glpsh/group.hpp"

#include <map>

namespace glpsh {

struct Group::Cache {
    // classes
    std::vector<ConjClass> classes;
    std::vector<int> class_of;
    bool classes_done = false;
    int exponent = 0;
    std::vector<int> generators;

    // subgroup interner
    std::vector<SubgroupData> subs;
    std::map<std::vector<int>, int> sub_ids;
    int trivial_id = -1, full_id = -1, center_id = -1;

    // per-subgroup lazies
    std::map<int, int> normalizer, centralizer, derived;
    std::map<int, Abelianization> abel;
    std::map<int, std::vector<int>> linchars;
    std::map<int, std::vector<int>> left_cosets;
    std::map<std::pair<int, int>, int> conj_sub;        // (sub, g) -> sub
    std::map<int, GroupPtr> sub_groups;                 // materializations

    // characters
    std::vector<CharData> chars;
    std::map<std::tuple<int, int, std::vector<int>>, int> char_ids;

    // double cosets
    std::map<std::pair<int, int>, DoubleCosets> dcosets;

    // subgroup enumeration
    std::vector<int> all_subs;
    std::vector<std::vector<int>> sub_classes;
    bool subs_done = false;

    // factors / parabolic splits
    std::vector<GroupPtr> factors;
    std::map<std::pair<int, int>, ParabolicData> splits;
    std::map<std::pair<int, int>, int> sl_U;
};

struct GroupAccess {
    static Group::Cache& cache(const Group& g) { return g.cache(); }
    static std::mutex& mutex(const Group& g) { return g.mu_; }
};

}  // namespace glpsh
