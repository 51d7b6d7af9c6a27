#ifndef TANGENCY_IO_HPP
#define TANGENCY_IO_HPP

#include "tangency/deformation.hpp"
#include "tangency/enumerative.hpp"
#include "tangency/incidence.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace tangency {

namespace detail {

// Non-empty lines with '#' comments stripped, split on whitespace.
std::vector<std::vector<std::string>> tokenized_lines(std::istream& in);

int parse_int(const std::string& s, const std::string& what);

}  // namespace detail

/// Reads a hypersurface file: one term "c m_0 m_1 ... m_n" per line.
/// n comes from the first term, d from its exponent sum; every other term
/// must agree.
template <class S>
HyperForm<S> read_hypersurface(std::istream& in, const typename ScalarOps<S>::Context& ctx) {
    const auto rows = detail::tokenized_lines(in);
    if (rows.empty()) throw PreconditionError("hypersurface file has no terms");
    const auto width = rows.front().size();
    if (width < 3) throw PreconditionError("term needs a coefficient and at least two exponents");
    Exponent first;
    for (std::size_t i = 1; i < width; ++i) first.push_back(detail::parse_int(rows.front()[i], "exponent"));
    int d = 0;
    for (int e : first) d += e;
    HyperForm<S> f(static_cast<int>(width) - 2, d);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != width)
            throw PreconditionError("term " + std::to_string(r + 1) + " has " + std::to_string(row.size() - 1) +
                                    " exponents, expected " + std::to_string(width - 1));
        Exponent e;
        for (std::size_t i = 1; i < width; ++i) e.push_back(detail::parse_int(row[i], "exponent"));
        f.add_term(e, ScalarOps<S>::parse(row[0], ctx));
    }
    return f;
}

/// Reads n+1 rows "cs ct": coefficients of s and t in a_i(s,t).
template <class S>
LineParam<S> read_line(std::istream& in, const typename ScalarOps<S>::Context& ctx) {
    const auto rows = detail::tokenized_lines(in);
    if (rows.size() < 2) throw PreconditionError("line file needs at least two rows");
    LinearForms<S> m(static_cast<Eigen::Index>(rows.size()), 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != 2) throw PreconditionError("line row " + std::to_string(r + 1) + " must be \"cs ct\"");
        m(static_cast<Eigen::Index>(r), 0) = ScalarOps<S>::parse(rows[r][0], ctx);
        m(static_cast<Eigen::Index>(r), 1) = ScalarOps<S>::parse(rows[r][1], ctx);
    }
    return LineParam<S>(m);
}

/// Writes a form in the hypersurface file format.
template <class S>
std::string write_hypersurface(const HyperForm<S>& f) {
    std::ostringstream os;
    for (const auto& [e, c] : f.terms()) {
        os << ScalarOps<S>::to_string(c);
        for (int x : e) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const CountRecord& r);
CountRecord count_record_from_json(const nlohmann::json& j);

/// Accepts a bare array of records or {"records": [...]}.
std::vector<CountRecord> read_count_series(const nlohmann::json& j);

nlohmann::json to_json(const SlopeReport& r);

nlohmann::json to_json(const BoundResult& r, TermOrder order = TermOrder::Descending);

nlohmann::json to_json(const FermatPlane& p);

/// Deformation report. `expected_h0` is null when no target is claimed
/// (contained lines, or k outside the generic range).
template <class S>
nlohmann::json deformation_report(int n, int k, const DeformationSpace<S>& space, bool claim_expected) {
    nlohmann::json j;
    j["contactOrder"] = space.contact.contained() ? nlohmann::json("contained") : nlohmann::json(*space.contact.order);
    j["k"] = k;
    j["rawDim"] = space.raw_dim;
    j["h0"] = space.h0;
    j["expected"] = "2n-k+1";
    if (claim_expected) {
        j["expectedValue"] = expected_h0(n, k);
        j["match"] = space.h0 == expected_h0(n, k);
    } else {
        j["expectedValue"] = nullptr;
        j["match"] = nullptr;
    }
    j["logVariant"] = space.log_variant;
    return j;
}

}  // namespace tangency

#endif
