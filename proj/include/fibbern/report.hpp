#ifndef FIBBERN_REPORT_HPP
#define FIBBERN_REPORT_HPP

#include <ostream>
#include <string>
#include <string_view>

#include <fibbern/grid.hpp>

namespace fibbern
{

enum class ReportFormat { text, json, csv };

struct ReportOptions {
    ReportFormat format = ReportFormat::text;
    // Values are always written for Unequal records; this adds them for all.
    bool all_values = false;
};

// "n=2 j=1 m=-3 ...", fields in declaration order.
std::string format_params(const IdentityParams &p);

void write_report(std::ostream &out, const VerificationReport &report, const ReportOptions &options = {});

} // namespace fibbern

#endif
