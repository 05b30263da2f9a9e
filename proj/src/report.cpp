#include <fibbern/report.hpp>

#include <cstdio>

#include <json.hpp>

namespace fibbern
{

namespace
{

using nlohmann::ordered_json;

ordered_json quad_json(const QuadExt &q) { return {{"rat", q.rat().to_string()}, {"irr", q.irr().to_string()}}; }

ordered_json value_json(const IdentityValue &v)
{
    if (const auto *q = std::get_if<QuadExt>(&v)) {
        return quad_json(*q);
    }
    auto arr = ordered_json::array();
    for (const auto &c : std::get<DensePoly>(v).coeffs()) {
        arr.push_back(quad_json(c));
    }
    return arr;
}

ordered_json params_json(const IdentityParams &p)
{
    ordered_json o;
    o["n"] = p.n;
    o["j"] = p.j;
    if (p.m) {
        o["m"] = *p.m;
    }
    if (p.q) {
        o["q"] = *p.q;
    }
    if (p.x) {
        o["x"] = quad_json(*p.x);
    }
    if (p.z) {
        o["z"] = quad_json(*p.z);
    }
    if (p.sign) {
        o["sign"] = *p.sign;
    }
    return o;
}

bool show_values(const GridRecord &r, const ReportOptions &o)
{
    return o.all_values || r.verdict.status == VerdictStatus::Unequal || r.oracle_agrees == false;
}

void write_json(std::ostream &out, const VerificationReport &report, const ReportOptions &options)
{
    ordered_json doc;
    std::size_t eq = 0, na = 0, checked = 0;
    for (const auto &s : report.summaries) {
        eq += s.equal;
        na += s.not_applicable;
        checked += s.oracle_checked;
    }
    doc["summary"] = {{"records", report.records.size()},
                      {"equal", eq},
                      {"unequal", report.count_unequal()},
                      {"not_applicable", na},
                      {"oracle_checked", checked},
                      {"oracle_disagreements", report.count_oracle_disagreements()},
                      {"passed", report.passed()}};
    auto ids = ordered_json::array();
    for (const auto &s : report.summaries) {
        ids.push_back({{"identity", identity_tag(s.id)},
                       {"equal", s.equal},
                       {"unequal", s.unequal},
                       {"not_applicable", s.not_applicable},
                       {"oracle_checked", s.oracle_checked},
                       {"oracle_disagreements", s.oracle_disagreements}});
    }
    doc["identities"] = std::move(ids);
    auto recs = ordered_json::array();
    for (const auto &r : report.records) {
        const auto &v = r.verdict;
        ordered_json o;
        o["identity"] = identity_tag(v.id);
        o["params"] = params_json(v.params);
        o["status"] = status_name(v.status);
        const bool values = show_values(r, options) && v.status != VerdictStatus::NotApplicable;
        o["lhs"] = values ? value_json(v.lhs) : ordered_json(nullptr);
        o["rhs"] = values ? value_json(v.rhs) : ordered_json(nullptr);
        o["note"] = v.note;
        recs.push_back(std::move(o));
    }
    doc["records"] = std::move(recs);
    out << doc.dump(1) << '\n';
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + '"';
}

template <class T, class Fn>
std::string opt(const std::optional<T> &v, Fn f)
{
    return v ? f(*v) : std::string();
}

void write_csv(std::ostream &out, const VerificationReport &report, const ReportOptions &options)
{
    out << "identity,n,j,m,q,x,z,sign,status,lhs,rhs,note\n";
    const auto num = [](long v) { return std::to_string(v); };
    const auto quad = [](const QuadExt &v) { return v.to_string(); };
    for (const auto &r : report.records) {
        const auto &v = r.verdict;
        const auto &p = v.params;
        const bool values = show_values(r, options) && v.status != VerdictStatus::NotApplicable;
        out << identity_tag(v.id) << ',' << p.n << ',' << p.j << ',' << opt(p.m, num) << ',' << opt(p.q, num) << ','
            << csv_field(opt(p.x, quad)) << ',' << csv_field(opt(p.z, quad)) << ','
            << opt(p.sign, [](int s) { return std::string(s > 0 ? "+" : "-"); }) << ',' << status_name(v.status)
            << ',' << (values ? csv_field(value_to_string(v.lhs)) : "") << ','
            << (values ? csv_field(value_to_string(v.rhs)) : "") << ',' << csv_field(v.note) << '\n';
    }
}

} // namespace

std::string format_params(const IdentityParams &p)
{
    std::string s = "n=" + std::to_string(p.n) + " j=" + std::to_string(p.j);
    if (p.m) {
        s += " m=" + std::to_string(*p.m);
    }
    if (p.q) {
        s += " q=" + std::to_string(*p.q);
    }
    if (p.x) {
        s += " x=" + p.x->to_string();
    }
    if (p.z) {
        s += " z=" + p.z->to_string();
    }
    if (p.sign) {
        s += *p.sign > 0 ? " sign=+" : " sign=-";
    }
    return s;
}

namespace
{

void write_text(std::ostream &out, const VerificationReport &report, const ReportOptions &options)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %8s %8s %8s %8s %8s\n", "identity", "equal", "unequal", "n/a", "oracle",
                  "disagree");
    out << line;
    for (const auto &s : report.summaries) {
        std::snprintf(line, sizeof line, "%-10s %8zu %8zu %8zu %8zu %8zu\n", std::string(identity_tag(s.id)).c_str(),
                      s.equal, s.unequal, s.not_applicable, s.oracle_checked, s.oracle_disagreements);
        out << line;
    }
    for (const auto &r : report.records) {
        if (!show_values(r, options)) {
            continue;
        }
        const auto &v = r.verdict;
        out << identity_tag(v.id) << ' ' << format_params(v.params) << ' ' << status_name(v.status) << '\n';
        if (v.status != VerdictStatus::NotApplicable) {
            out << "  lhs: " << value_to_string(v.lhs) << "\n  rhs: " << value_to_string(v.rhs) << '\n';
        }
        if (!v.note.empty()) {
            out << "  note: " << v.note << '\n';
        }
    }
    out << "records " << report.records.size() << ", unequal " << report.count_unequal() << ", oracle disagreements "
        << report.count_oracle_disagreements() << (report.passed() ? ", PASS\n" : ", FAIL\n");
}

} // namespace

void write_report(std::ostream &out, const VerificationReport &report, const ReportOptions &options)
{
    switch (options.format) {
    case ReportFormat::json: write_json(out, report, options); break;
    case ReportFormat::csv: write_csv(out, report, options); break;
    case ReportFormat::text: write_text(out, report, options); break;
    }
}

} // namespace fibbern
