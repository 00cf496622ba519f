#ifndef ROOTCONG_COMPOSITION_HPP
#define ROOTCONG_COMPOSITION_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rootcong/correspondence.hpp"

namespace rootcong {

/// Root-level product of two cyclic-quotient ideals. NonCyclicProduct is a
/// successful outcome (the product exists, its quotient just is not cyclic);
/// it carries the product lattice for inspection.
struct ComposeRootsResult {
    enum class Status { Composed, NonCyclicProduct } status;
    std::optional<RootClass> root;       // set when Composed
    std::optional<IdealHNF> product;     // set when NonCyclicProduct
};

ComposeRootsResult compose_roots(const MonicPoly& f, const RootClass& r1, const RootClass& r2);

/// Root-level product of two content-free cubic ideals. IntegerDivisible
/// means the product ideal acquires an integer content.
struct ComposePairsResult {
    enum class Status { Composed, IntegerDivisible } status;
    std::optional<RootPair> pair;
    std::optional<IdealHNF> product;
    Int l;  // the exponent-transfer factor, set when Composed
};

ComposePairsResult compose_pairs(const MonicPoly& f, const RootPair& p, const RootPair& q);

/// The unique root of F mod M satisfying every congruence constraint
/// (modulus, residue) and the optional extra predicate. Throws
/// uniqueness_violation when zero or several candidates survive.
RootClass lift_filter(const MonicPoly& f, const Int& M,
                      const std::vector<std::pair<Int, Int>>& congruences,
                      const std::function<bool(const Int&)>& extra = nullptr);

} // namespace rootcong

#endif
