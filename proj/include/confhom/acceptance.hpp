#pragma once

#include <functional>
#include <string>
#include <vector>

namespace confhom {

// One verification check inside the battery. Criteria group the checks:
//   1 engine agreement on the corpus (plus golden-file comparison)
//   2 one-particle ground truth
//   3 cone identification
//   4 long exact sequence
//   5 star-restricted subcomplex
//   6 contraction chain maps
//   7 ordered rank counts
//   8 normal-form property suite
//   9 naturality under graph symmetries
struct CheckRecord {
    int criterion = 0;
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
};

struct AcceptanceSummary {
    std::vector<CheckRecord> records;

    int count(int criterion, const std::string& status) const;
    // a criterion passes when it ran at least once and nothing failed
    bool criterion_ok(int criterion) const;
    bool all_ok() const;
};

using RecordSink = std::function<void(const CheckRecord&)>;

// Short human labels for the nine criteria, indexed 1..9.
const char* criterion_label(int criterion);

// Runs the full verification battery over a directory of .graph files
// with .expected sidecars, streaming a record per check through the
// sink as results arrive.
AcceptanceSummary run_acceptance(const std::string& corpus_dir, const RecordSink& sink = {});

}  // namespace confhom
