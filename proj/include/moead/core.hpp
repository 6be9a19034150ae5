#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace moead {

using Vector = std::vector<double>;

/// One evaluated point: decision variables, raw and scaled objectives
/// (minimization), total constraint violation and provenance.
struct Solution {
    Vector x;
    Vector f;
    Vector f_scaled;
    double violation = 0.0;
    std::uint64_t eval_index = 0;
    std::uint32_t run_id = 0;

    bool feasible() const { return violation == 0.0; }
};

/// Pareto dominance on objective vectors, minimization convention:
/// a dominates b iff a <= b component-wise and a != b.
/// Throws std::invalid_argument on length mismatch.
bool dominates(const Vector& a, const Vector& b);

/// Set of mutually nondominated solutions. Insertion keeps the set
/// nondominated; on identical objective vectors the incumbent (earlier
/// eval_index) wins.
class ParetoSet {
public:
    /// Returns true if the solution entered the set.
    bool insert(Solution s);

    const std::vector<Solution>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

private:
    std::vector<Solution> members_;
};

/// Keeps exactly the subset not dominated by any list member; ties on
/// identical objective vectors keep the earliest eval_index.
ParetoSet nondominated_filter(std::span<const Solution> points);

/// subproblem_id for archive (UEA) entries in the run log.
inline constexpr std::int32_t kArchiveEntry = -1;

/// One line of the run log: a nondominated solution snapshot. Archive
/// entries carry subproblem_id = kArchiveEntry and are written once, when
/// the solution enters the archive; the archive at evaluation e is the
/// nondominated filter of all archive records with eval_index <= e.
struct RunLogRecord {
    std::uint32_t run_id = 0;
    std::uint32_t generation = 0;
    std::uint64_t eval_index = 0;
    std::int32_t subproblem_id = kArchiveEntry;
    Vector x;
    Vector f;
    double violation = 0.0;
    bool feasible = true;
};

struct RunLog {
    std::vector<RunLogRecord> records;
};

/// Line-delimited text format, one record per line after a header naming
/// the fields. Vectors are semicolon-separated decimals printed with 17
/// significant digits so that write -> parse reproduces identical values.
void write_run_log(std::ostream& os, const RunLog& log);
RunLog read_run_log(std::istream& is);

/// Atomic variant: writes to a temp file in the same directory, then renames.
void write_run_log_file(const std::filesystem::path& path, const RunLog& log);
RunLog read_run_log_file(const std::filesystem::path& path);

}  // namespace moead
