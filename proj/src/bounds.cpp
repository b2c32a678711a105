#include "cyldom/bounds.hpp"

#include <sstream>

namespace cyldom {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "paper";
        case Provenance::Computed: return "computed";
        case Provenance::Derived: return "derived";
    }
    return "paper";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "paper") return Provenance::Paper;
    if (s == "computed") return Provenance::Computed;
    if (s == "derived") return Provenance::Derived;
    throw input_error("unknown provenance '" + s + "'");
}

WasteTable WasteTable::paper_defaults() {
    WasteTable t;
    const int interior_small[] = {2, 3, 3, 4, 4}; // rows 5..9 at residue 2
    for (int rows = 5; rows <= 9; ++rows)
        t.set(SegmentKind::Interior, rows, 2,
              {0, interior_small[rows - 5], Provenance::Paper, ""});
    const int interior_ten[] = {0, 6, 5, 9, 6};
    for (int r = 0; r < 5; ++r)
        t.set(SegmentKind::Interior, 10, r, {0, interior_ten[r], Provenance::Paper, ""});
    for (int r = 0; r < 5; ++r)
        t.set(SegmentKind::Edge, 10, r, {1, 0, Provenance::Paper, ""});
    t.set(SegmentKind::Edge, 11, 2, {1, 2, Provenance::Paper, ""});
    t.set(SegmentKind::Edge, 12, 2, {1, 3, Provenance::Paper, ""});
    t.set(SegmentKind::Edge, 13, 2, {1, 3, Provenance::Paper, ""});
    return t;
}

std::optional<WasteConstant> WasteTable::find(SegmentKind kind, int rows,
                                              int residue) const {
    auto it = entries_.find({kind, rows, residue});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void WasteTable::set(SegmentKind kind, int rows, int residue, WasteConstant c) {
    entries_[{kind, rows, residue}] = std::move(c);
}

long long WasteTable::eval(SegmentKind kind, int rows, int n) const {
    auto c = find(kind, rows, n % 5);
    if (!c)
        throw input_error("no waste constant for " + to_string(kind) + " rows " +
                          std::to_string(rows) + " at n = " + std::to_string(n) +
                          " (mod 5 residue " + std::to_string(n % 5) + ")");
    return static_cast<long long>(c->a) * n + c->b;
}

std::string WasteTable::serialize() const {
    std::ostringstream out;
    out << "# cyldom waste constants: kind rows residue a b provenance [cert]\n";
    for (const auto& [key, c] : entries_) {
        auto [kind, rows, residue] = key;
        out << to_string(kind) << ' ' << rows << ' ' << residue << ' ' << c.a
            << ' ' << c.b << ' ' << to_string(c.prov);
        if (!c.cert.empty()) out << ' ' << c.cert;
        out << '\n';
    }
    return out.str();
}

WasteTable WasteTable::parse(const std::string& text) {
    WasteTable t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind, prov, cert;
        int rows, residue;
        WasteConstant c;
        ls >> kind >> rows >> residue >> c.a >> c.b >> prov;
        if (!ls) throw input_error("bad waste table line: " + line);
        ls >> cert;
        c.prov = provenance_from_string(prov);
        c.cert = cert;
        t.set(segment_kind_from_string(kind), rows, residue, c);
    }
    return t;
}

PartitionPlan plan_lower(int m) {
    if (m < 23)
        throw input_error("lower-bound plans start at m = 23; smaller m is "
                          "covered by previously published exact values");
    PartitionPlan plan;
    plan.purpose = PlanPurpose::Lower;
    auto edge = [](int rows) { return PlanSegment{SegmentKind::Edge, rows}; };
    auto interior = [](int rows) {
        return PlanSegment{SegmentKind::Interior, rows};
    };
    if (m <= 26) {
        static const int pairs[4][2] = {{11, 12}, {12, 12}, {12, 13}, {13, 13}};
        plan.segments = {edge(pairs[m - 23][0]), edge(pairs[m - 23][1])};
        return plan;
    }
    int rem = m - 22;
    int tens = rem / 10;
    int r = rem % 10;
    std::vector<int> fillers;
    if (r == 0) {
        // nothing extra
    } else if (r >= 5) {
        fillers.push_back(r);
    } else {
        static const int pairs[4][2] = {{5, 6}, {6, 6}, {6, 7}, {6, 8}};
        --tens; // rem >= 11 whenever r is 1..4 and m >= 27
        fillers.push_back(pairs[r - 1][0]);
        fillers.push_back(pairs[r - 1][1]);
    }
    plan.segments.push_back(edge(11));
    for (int f : fillers) plan.segments.push_back(interior(f));
    for (int i = 0; i < tens; ++i) plan.segments.push_back(interior(10));
    plan.segments.push_back(edge(11));
    return plan;
}

long long lower_bound(int m, int n, const WasteTable& table) {
    if (n % 5 != 2) throw input_error("lower_bound requires n = 2 (mod 5)");
    if (n < 32)
        throw input_error("lower_bound requires n >= 32 (periodicity onset)");
    PartitionPlan plan = plan_lower(m);
    long long waste = 0;
    for (const auto& seg : plan.segments)
        waste += table.eval(seg.kind, seg.rows, n);
    return ceil_div(waste + static_cast<long long>(m) * n, 5);
}

long long lb_table(int i, int j, int k) {
    long long I = i, J = j, K = k;
    long long base = 10 * I * K + 5 * I;
    switch (J) {
        case 0: return base + 2 * K;
        case 1: return base + 3 * K;
        case 2: return base + 4 * K + 1;
        case 3: return base + 5 * K + 1;
        case 4: return base + 6 * K + 2;
        case 5: return base + 7 * K + 2;
        case 6: return base + 8 * K + 3;
        case 7: return base + 9 * K + 3;
        case 8: return base + 10 * K + 4;
        case 9: return base + 11 * K + 4;
        default: throw input_error("lb_table requires 0 <= j <= 9");
    }
}

long long closed_form(int m, int n) {
    if (n % 5 != 2) throw input_error("closed_form requires n = 2 (mod 5)");
    // ((4n+2)/10 * m + (4n-13)/5) / 2 == ((4n+2)m + 2(4n-13)) / 20
    long long num = (4LL * n + 2) * m + 2 * (4LL * n - 13);
    return ceil_div(num, 20);
}

Rational pz_upper_bound(int m, int n) {
    if (n % 5 != 2)
        throw input_error("pz_upper_bound is quoted for n = 2 (mod 5)");
    return Rational(static_cast<long long>(m + 2) * n, 5) +
           Rational(m + 2, 10);
}

} // namespace cyldom
