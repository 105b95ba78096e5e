#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "treepat/enumerate.hpp"
#include "treepat/structure.hpp"

namespace treepat {

enum class Family { All, Positive, Irreducible, ReduciblePositive };

Family family_from_name(const std::string& name);
const char* family_name(Family f);
bool family_member(const Classification& c, Family f);

struct ScanRecord {
    Pattern pattern;
    Classification cls;
};

// Classify every n-periodic pattern up to rotation, in enumeration order.
// The serial scan is the reference; the parallel scan is the OpenMP kernel
// and must produce the identical stream.
std::vector<ScanRecord> scan_family_serial(int n, double tol = 1e-10);
std::vector<ScanRecord> scan_family_parallel(int n, double tol = 1e-10);
std::vector<ScanRecord> scan_family(int n, Family f = Family::All, bool parallel = true,
                                    double tol = 1e-10);

// Streaming variant: fn may be invoked concurrently, order unspecified.
void scan_family_unordered(int n, double tol,
                           const std::function<void(const Pattern&, const Classification&)>& fn);

}  // namespace treepat
