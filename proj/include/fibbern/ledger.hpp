#ifndef FIBBERN_LEDGER_HPP
#define FIBBERN_LEDGER_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <fibbern/grid.hpp>

namespace fibbern
{

// Machine evidence for one correction, gathered over an evidence grid.
struct LedgerEvidence {
    std::size_t tuples = 0;
    // Tuples where the printed form fails; the first one is kept.
    std::size_t printed_failures = 0;
    std::string first_failure;
    std::size_t corrected_equal = 0;
    std::size_t oracle_checked = 0;
    std::size_t oracle_agreements = 0;
};

struct DiscrepancyEntry {
    IdentityId id{};
    std::string printed_form;
    std::string corrected_form;
    std::string oracle_evidence;
    LedgerEvidence evidence;
    // Printed form fails (or is not an identity), corrected form holds on every
    // tuple, and the oracle agrees on every tuple.
    bool confirmed = false;
};

// A smaller grid than the verification default; every entry still sees
// n = 0, both parities, negative m and several j.
GridSpec ledger_grid();

// Rebuilds every entry, running the printed and corrected forms and the
// oracle over the grid.
std::vector<DiscrepancyEntry> discrepancy_ledger(const GridSpec &grid = ledger_grid());

void write_ledger(std::ostream &out, const std::vector<DiscrepancyEntry> &entries);

} // namespace fibbern

#endif
