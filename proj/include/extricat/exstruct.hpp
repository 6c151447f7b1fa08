#pragma once

#include "extricat/morphcat.hpp"
#include "extricat/repcat.hpp"
#include "extricat/verdict.hpp"

#include <functional>
#include <memory>
#include <set>

namespace extricat {

// A finite set of catalog indecomposables standing for its additive closure.
struct Subcat {
    std::shared_ptr<const Catalog> catalog;
    std::set<int> members;

    static Subcat full(std::shared_ptr<const Catalog> cat);
    static Subcat of_names(std::shared_ptr<const Catalog> cat, const std::vector<std::string>& names);
    static Subcat of_indices(std::shared_ptr<const Catalog> cat, const std::vector<int>& idx);

    bool contains_index(int i) const { return members.count(i) > 0; }
    bool is_full() const { return static_cast<int>(members.size()) == catalog->size(); }
    std::vector<std::string> member_names() const;
    Json to_json() const;
};

// Membership of an object in the additive closure: decompose, then match
// every summand against the member set.
struct MembershipResult {
    Status status = Status::FAILS;
    std::vector<int> summand_indices; // catalog indices, when all matched
    Json detail;
};
MembershipResult membership(const Rep& m, const Subcat& s, const Caps& caps);

// Decompose into catalog indices regardless of a member set; -1 entries
// mark summands outside the catalog.
std::vector<int> catalog_summands(const Rep& m, const Catalog& cat, const Caps& caps, bool* complete = nullptr);

// Extension-closed carrier inside an ambient module category. The extension
// groups are the ambient Ext^1 groups; check_extension_closed certifies
// that every realized middle stays inside.
struct ExCat {
    Subcat carrier;
    std::shared_ptr<ExtCache> ext;

    const Catalog& catalog() const { return *carrier.catalog; }
};
ExCat make_excat(Subcat carrier);

Verdict check_extension_closed(const Subcat& s, const Caps& caps);

struct MorphismClass {
    Status status = Status::HOLDS; // UNKNOWN when a membership hit a cap
    bool inflation = false;
    bool deflation = false;
    bool compatible = false;
    bool iso = false;
};
MorphismClass classify_morphism(const RepMap& f, const ExCat& x, const Caps& caps);

// conflation with all three terms inside the carrier
Verdict conflation_in(const Conflation& c, const ExCat& x, const Caps& caps);

enum class Side { left_side, right_side };
enum class ExactMode { exact_mode, left_mode, right_mode };
std::string to_string(ExactMode m);
ExactMode exact_mode_from_string(const std::string& s);

// Three-term sequence A -f-> B -g-> C. Right exactness factors f through
// the kernel of the deflation g; left exactness dually through the
// cokernel of the inflation f.
Verdict exact_sequence_check3(const RepMap& f, const RepMap& g, Side side, const ExCat& x, const Caps& caps);

// Four-term sequence A -f-> B -g-> C -h-> D, factored as a conflation
// A -> B -> K followed by a conflation K -> C -> D with g = g2 g1.
Verdict exact_sequence_check4(const RepMap& f, const RepMap& g, const RepMap& h, Side side, const ExCat& x,
                              const Caps& caps);

struct Et3Fill {
    RepMap fill;
    Verdict verdict; // checks a_* delta1 = c^* delta2
};
Et3Fill et3_fill(const Conflation& d1, const Conflation& d2, const RepMap& a, const RepMap& b);
Et3Fill et3_fill(const Conflation& d1, const Conflation& d2, const RepMap& a, const RepMap& b,
                 ExtCache& cache);

struct Et4Result {
    Rep e;
    Conflation composite; // A -> C -> E
    Conflation quotient;  // D -> E -> F
    Verdict cert_i, cert_ii, cert_iii;
    Status aggregate() const;
};
Et4Result et4_compose(const Conflation& d1, const Conflation& d2);
Et4Result et4_compose(const Conflation& d1, const Conflation& d2, ExtCache& cache);

// Enumerates realized conflations with indecomposable end terms taken from
// the carrier: all classes when p^dim fits under the cap, otherwise basis
// classes plus pairwise sums. Returns true when the sweep was complete.
bool for_each_conflation(const ExCat& x, const Caps& caps, bool include_split,
                         const std::function<bool(const Conflation&, int c_idx, int a_idx, const Vec&)>& fn);

Verdict functor_exactness(const RecContext& ctx, const FunctorHandle& f, ExactMode mode, const ExCat& src,
                          const ExCat& tgt, const Caps& caps);

// Projectivity in the carrier via Ext-vanishing against every member.
std::vector<int> projectives_in(const ExCat& x);
std::vector<int> injectives_in(const ExCat& x);

// Canonical evaluation map (+)_{t in gens} t^{dim Hom(t, m)} -> m.
struct EvalMap {
    Rep sum;
    RepMap map; // sum -> m
    std::vector<int> used; // generator index per block
};
EvalMap eval_sum_map(const Catalog& cat, const std::set<int>& gens, const Rep& m);
// dual: m -> (+)_{f in gens} f^{dim Hom(m, f)}
EvalMap coeval_sum_map(const Catalog& cat, const std::set<int>& gens, const Rep& m);

Verdict has_enough_projectives(const ExCat& x, const Caps& caps);
Verdict has_enough_injectives(const ExCat& x, const Caps& caps);

} // namespace extricat
