#pragma once

#include "extricat/recollement.hpp"

namespace extricat {

// Ext^1(add T, add F) = 0, swept over the indecomposable generators.
Verdict ext_orthogonal(const Subcat& t, const Subcat& f);

struct ApproxResult {
    enum class Kind { FOUND, NO, UNKNOWN } kind = Kind::NO;
    std::optional<Conflation> conflation;
    Json trace;
};

// Conflation F -> T -> C with T in add(t), F in add(f): the trivial member
// case first, then the canonical evaluation map, then a bounded search over
// multiplicity-capped sums. NO is relative to the bound.
ApproxResult right_approximation(const Rep& c, const Subcat& t, const Subcat& f, const ExCat& x,
                                 const Caps& caps);
// dual: conflation C -> F' -> T'
ApproxResult left_approximation(const Rep& c, const Subcat& t, const Subcat& f, const ExCat& x,
                                const Caps& caps);

struct CotorsionReport {
    Verdict orthogonality;
    Verdict right_side; // condition (b)
    Verdict left_side;  // condition (c)
    Json per_object = Json::object();

    bool is_cotorsion() const;
    Status aggregate() const;
    Json to_json() const;
};
CotorsionReport check_cotorsion_pair(const Subcat& t, const Subcat& f, const ExCat& x, const Caps& caps);

struct EnumeratedPair {
    Subcat t, f;
    CotorsionReport report;
};
struct EnumerationResult {
    std::vector<EnumeratedPair> pairs;
    int candidates_after_filter = 0;
    bool any_unknown = false;
    Json to_json() const;
};
// All cotorsion pairs of the carrier, by subset enumeration with the
// necessary-condition filters applied first. Throws when the carrier is
// larger than caps.subset_limit.
EnumerationResult enumerate_cotorsion_pairs(const ExCat& x, const Caps& caps);

struct GluePairInput {
    Subcat t1, f1; // pair in the left side
    Subcat t2, f2; // pair in the right side
};

struct GlueResult {
    Subcat glued_t, glued_f;
    Json trace;
    Status status = Status::HOLDS; // UNKNOWN when a membership hit a cap
};
GlueResult glue(const RecollementScenario& s, const GluePairInput& input);

struct TheoremReport {
    std::vector<ReportEntry> hypotheses;
    std::vector<ReportEntry> conditions;
    CotorsionReport final_check;
    bool inconsistent = false;
    Status aggregate() const;
    Json to_json() const;
};
// Hypotheses and sufficient conditions for the glued pair to be a cotorsion
// pair, plus the direct check and a consistency flag: verified hypotheses
// with a holding condition but a failing direct check mark a bug.
TheoremReport theorem44_conditions(const RecollementScenario& s, const GluePairInput& input,
                                   const GlueResult& glued);

struct GluedApproxResult {
    Status status = Status::FAILS;
    std::optional<Conflation> conflation;
    int failed_stage = 0;
    Json trace;
};
// The constructive approximation for the glued pair: direction 'b' produces
// F -> T -> M through two pullbacks along adjunction units, direction 'c'
// dually M -> F -> T through pushouts along counits; every stage carries a
// membership certificate and failures report the stage index.
GluedApproxResult glued_approximation(const RecollementScenario& s, const GluePairInput& input, const Rep& m,
                                      char direction);

struct RestrictionResult {
    CotorsionReport input_check;   // (U, V) in the middle
    Verdict preconditions;
    Subcat restricted_t, restricted_f;
    CotorsionReport restricted_check;
    Json to_json() const;
};
// Theorem-style restriction of a middle cotorsion pair to a side: via 'i'
// the pair (i^* U, i^! V) in the left side under i_* i^! U, i_* i^* U c U;
// via 'j' the pair (j^* U, j^* V) in the right side under
// j_* j^* V c V or j_! j^* U c U.
RestrictionResult restrict_pair(const RecollementScenario& s, const Subcat& u, const Subcat& v, char via);

} // namespace extricat
