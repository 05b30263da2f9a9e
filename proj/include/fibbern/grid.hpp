#ifndef FIBBERN_GRID_HPP
#define FIBBERN_GRID_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <fibbern/identities.hpp>

namespace fibbern
{

// A z sample, either a fixed rational or a rational multiple of 1/L_j.
struct ZSample {
    Rational scale;
    bool over_lucas = false;
};

struct GridSpec {
    long n_min = 0;
    long n_max = 30;
    long j_min = 1;
    long j_max = 8;
    long m_min = -5;
    long m_max = 5;
    long q_max = 6;
    std::vector<QuadExt> x_values = default_x_values();
    std::vector<ZSample> z_values = default_z_values();
    // z samples for the transform identity, which is evaluated pointwise in x as well.
    std::vector<ZSample> transform_z_values = {{Rational(1), false}};

    static std::vector<QuadExt> default_x_values();
    static std::vector<ZSample> default_z_values();
};

// Every parameter tuple the grid assigns to one identity, in sorted order.
std::vector<IdentityParams> grid_params(const IdentityInfo &info, const GridSpec &spec);

struct VerifyOptions {
    unsigned jobs = 1;
    bool with_oracle = true;
    long oracle_order = 32;
    EvalOptions eval;
};

struct GridRecord {
    IdentityVerdict verdict;
    // Set when the oracle ran; false on disagreement.
    std::optional<bool> oracle_agrees;
};

struct IdentitySummary {
    IdentityId id{};
    std::size_t equal = 0;
    std::size_t unequal = 0;
    std::size_t not_applicable = 0;
    std::size_t oracle_checked = 0;
    std::size_t oracle_disagreements = 0;
};

struct VerificationReport {
    std::vector<IdentitySummary> summaries;
    // Sorted by (id, params).
    std::vector<GridRecord> records;

    std::size_t count_unequal() const;
    std::size_t count_oracle_disagreements() const;
    bool passed() const { return count_unequal() == 0 && count_oracle_disagreements() == 0; }
};

VerificationReport verify_grid(const std::vector<IdentityId> &ids, const GridSpec &spec,
                               const VerifyOptions &options = {});

} // namespace fibbern

#endif
