#include "treepat/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treepat {

Family family_from_name(const std::string& name) {
    if (name == "all") return Family::All;
    if (name == "positive") return Family::Positive;
    if (name == "irreducible") return Family::Irreducible;
    if (name == "reducible-positive") return Family::ReduciblePositive;
    throw DomainError("unknown family: " + name);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::All: return "all";
        case Family::Positive: return "positive";
        case Family::Irreducible: return "irreducible";
        case Family::ReduciblePositive: return "reducible-positive";
    }
    return "all";
}

bool family_member(const Classification& c, Family f) {
    switch (f) {
        case Family::All: return true;
        case Family::Positive: return !c.zero;
        case Family::Irreducible: return c.irreducible;
        case Family::ReduciblePositive: return !c.zero && c.reducible;
    }
    return true;
}

std::vector<ScanRecord> scan_family_serial(int n, double tol) {
    std::vector<ScanRecord> out;
    for_each_pattern(n, [&](const Pattern& p) { out.push_back({p, classify(p, tol)}); });
    return out;
}

std::vector<ScanRecord> scan_family_parallel(int n, double tol) {
    std::vector<Pattern> pats = enumerate_patterns(n, true);
    std::vector<Classification> cls(pats.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < static_cast<long long>(pats.size()); ++i)
        cls[static_cast<size_t>(i)] = classify(pats[static_cast<size_t>(i)], tol);
    std::vector<ScanRecord> out;
    out.reserve(pats.size());
    for (size_t i = 0; i < pats.size(); ++i)
        out.push_back({std::move(pats[i]), std::move(cls[i])});
    return out;
}

std::vector<ScanRecord> scan_family(int n, Family f, bool parallel, double tol) {
    std::vector<ScanRecord> all = parallel ? scan_family_parallel(n, tol) : scan_family_serial(n, tol);
    if (f == Family::All) return all;
    std::vector<ScanRecord> out;
    for (auto& r : all)
        if (family_member(r.cls, f)) out.push_back(std::move(r));
    return out;
}

void scan_family_unordered(int n, double tol,
                           const std::function<void(const Pattern&, const Classification&)>& fn) {
    for_each_pattern_unordered(n, [&](const Pattern& p) { fn(p, classify(p, tol)); });
}

}  // namespace treepat
