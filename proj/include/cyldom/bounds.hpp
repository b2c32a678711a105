#pragma once

// Lower bounds on gamma(C_n x P_m) assembled from per-segment waste
// constants, the closed form they collapse to, and the Pavlic-Zerovnik upper
// bound, all in exact integer/rational arithmetic. Valid for n = 2 (mod 5).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyldom/rational.hpp"
#include "cyldom/segment.hpp"

namespace cyldom {

enum class Provenance { Paper, Computed, Derived };
std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// Minimum waste of a segment as an affine form a*n + b, keyed by
// (kind, rows, n mod 5).
struct WasteConstant {
    int a = 0;
    int b = 0;
    Provenance prov = Provenance::Paper;
    std::string cert; // reference to the periodicity certificate, if computed
};

class WasteTable {
public:
    // The constants reported for rows <= 13: interior rows 5..9 at residue 2
    // are 2,3,3,4,4; interior rows 10 per residue are 0,6,5,9,6; edge rows 10
    // is n; edge 11 is n+2 and edge 12,13 are n+3 at residue 2.
    static WasteTable paper_defaults();

    std::optional<WasteConstant> find(SegmentKind kind, int rows,
                                      int residue) const;
    void set(SegmentKind kind, int rows, int residue, WasteConstant c);
    long long eval(SegmentKind kind, int rows, int n) const;

    std::string serialize() const;
    static WasteTable parse(const std::string& text);

    const std::map<std::tuple<SegmentKind, int, int>, WasteConstant>& entries()
        const {
        return entries_;
    }

private:
    std::map<std::tuple<SegmentKind, int, int>, WasteConstant> entries_;
};

struct PlanSegment {
    SegmentKind kind = SegmentKind::Interior;
    int rows = 0;
    bool operator==(const PlanSegment&) const = default;
};

enum class PlanPurpose { Lower, Upper };

struct PartitionPlan {
    PlanPurpose purpose = PlanPurpose::Lower;
    std::vector<PlanSegment> segments; // top to bottom; edges first and last
    bool extra_vertex = false;         // upper plans, even m >= 28

    int total_rows() const {
        int sum = 0;
        for (const auto& s : segments) sum += s.rows;
        return sum;
    }
};

// Row partition behind the lower bound: edge pairs (11,12),(12,12),(12,13),
// (13,13) for m = 23..26; for m >= 27 edges (11,11) with interior filler of
// 10-row segments plus one 5..9-row segment, or, when (m-22) mod 10 is 1..4,
// one fewer 10 and the pair (5,6),(6,6),(6,7) or (6,8).
PartitionPlan plan_lower(int m);

// ceil((sum of segment waste constants + m*n)/5) using plan_lower(m).
long long lower_bound(int m, int n,
                      const WasteTable& table = WasteTable::paper_defaults());

// The ten-case polynomial table at m = 10i+j, n = 5k+2. Pure formula; its
// derivation assumes m >= 23 but the identity sweep evaluates it everywhere.
long long lb_table(int i, int j, int k);

// ceil(((4n+2)/10 * m + (4n-13)/5) / 2), exact.
long long closed_form(int m, int n);

// (m+2)n/5 + (m+2)/10 as an exact rational.
Rational pz_upper_bound(int m, int n);

} // namespace cyldom
