#include "frcodes/code.hpp"

#include <algorithm>

#include "frcodes/errors.hpp"

namespace fr {

namespace {

const char* kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::RowWeight: return "row-weight";
        case ViolationKind::ColumnWeight: return "column-weight";
        case ViolationKind::ParameterArithmetic: return "parameter-arithmetic";
        case ViolationKind::IndexRange: return "index-range";
    }
    return "unknown";
}

void check_parameter_arithmetic(const FrParams& p, ValidationReport& report) {
    if (!params_consistent(p)) {
        report.violations.push_back({ViolationKind::ParameterArithmetic, 0,
                                     static_cast<long long>(p.n) * p.d,
                                     static_cast<long long>(p.rho) * p.theta});
    }
}

}  // namespace

std::string describe(const Violation& v) {
    std::string out = kind_name(v.kind);
    if (v.location > 0) out += " at " + std::to_string(v.location);
    out += ": observed " + std::to_string(v.observed) + ", expected " +
           std::to_string(v.expected);
    return out;
}

std::string describe(const ValidationReport& report) {
    if (report.valid()) return "valid";
    std::string out;
    for (const auto& v : report.violations) {
        if (!out.empty()) out += "; ";
        out += describe(v);
    }
    return out;
}

ValidationReport validate(const IncidenceMatrix& m, const FrParams& p) {
    if (m.rows() != p.n || m.cols() != p.theta)
        throw InvalidArgumentError(
            "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
            " but params expect " + std::to_string(p.n) + "x" + std::to_string(p.theta));

    ValidationReport report;
    check_parameter_arithmetic(p, report);
    for (int r = 0; r < m.rows(); ++r) {
        const int w = m.row_weight(r);
        if (w != p.d)
            report.violations.push_back({ViolationKind::RowWeight, r + 1, w, p.d});
    }
    for (int c = 0; c < m.cols(); ++c) {
        const int w = m.col_weight(c);
        if (w != p.rho)
            report.violations.push_back({ViolationKind::ColumnWeight, c + 1, w, p.rho});
    }
    return report;
}

ValidationReport validate(const FrCode& code) {
    const FrParams& p = code.params;
    ValidationReport report;
    check_parameter_arithmetic(p, report);

    if (static_cast<int>(code.nodes.size()) != p.n) {
        report.violations.push_back({ViolationKind::IndexRange, 0,
                                     static_cast<long long>(code.nodes.size()), p.n});
        return report;
    }

    std::vector<int> replication(static_cast<std::size_t>(std::max(p.theta, 0)), 0);
    for (int i = 0; i < p.n; ++i) {
        const auto& node = code.nodes[static_cast<std::size_t>(i)];
        if (static_cast<int>(node.size()) != p.d)
            report.violations.push_back({ViolationKind::RowWeight, i + 1,
                                         static_cast<long long>(node.size()), p.d});
        for (int packet : node) {
            if (packet < 1 || packet > p.theta) {
                report.violations.push_back({ViolationKind::IndexRange, i + 1, packet,
                                             p.theta});
                continue;
            }
            ++replication[static_cast<std::size_t>(packet - 1)];
        }
        // Duplicates within a node show up as a replication miscount below;
        // flag them here for a precise location.
        for (std::size_t j = 1; j < node.size(); ++j)
            if (node[j] == node[j - 1])
                report.violations.push_back({ViolationKind::IndexRange, i + 1,
                                             node[j], -1});
    }
    for (int packet = 1; packet <= p.theta; ++packet) {
        const int count = replication[static_cast<std::size_t>(packet - 1)];
        if (count != p.rho)
            report.violations.push_back({ViolationKind::ColumnWeight, packet, count,
                                         p.rho});
    }
    return report;
}

void require_valid(const FrCode& code) {
    const ValidationReport report = validate(code);
    if (!report.valid())
        throw InvalidArgumentError("invalid FR code: " + describe(report));
}

void require_valid(const IncidenceMatrix& m, const FrParams& p) {
    const ValidationReport report = validate(m, p);
    if (!report.valid())
        throw InvalidArgumentError("invalid incidence matrix: " + describe(report));
}

FrCode matrix_to_code(const IncidenceMatrix& m, const FrParams& p,
                      std::string provenance) {
    require_valid(m, p);
    FrCode code;
    code.params = p;
    code.provenance = std::move(provenance);
    code.nodes.resize(static_cast<std::size_t>(p.n));
    for (int r = 0; r < p.n; ++r) {
        auto& node = code.nodes[static_cast<std::size_t>(r)];
        node.reserve(static_cast<std::size_t>(p.d));
        for (int c = 0; c < p.theta; ++c)
            if (m.get(r, c)) node.push_back(c + 1);
    }
    return code;
}

IncidenceMatrix code_to_matrix(const FrCode& code) {
    require_valid(code);
    IncidenceMatrix m(code.params.n, code.params.theta);
    for (int r = 0; r < code.params.n; ++r)
        for (int packet : code.nodes[static_cast<std::size_t>(r)])
            m.set(r, packet - 1, true);
    return m;
}

FrCode transpose_dual(const FrCode& code) {
    const IncidenceMatrix m = code_to_matrix(code);
    const FrParams dual{code.params.theta, code.params.n, code.params.rho,
                        code.params.d};
    std::string provenance = code.provenance.empty()
                                 ? std::string("transpose-dual")
                                 : "transpose-dual(" + code.provenance + ")";
    return matrix_to_code(m.transposed(), dual, std::move(provenance));
}

std::vector<int> intersection_profile(const FrCode& code) {
    require_valid(code);
    const int n = code.params.n;
    std::vector<int> profile;
    profile.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = code.nodes[static_cast<std::size_t>(i)];
            const auto& b = code.nodes[static_cast<std::size_t>(j)];
            int count = 0;
            auto ai = a.begin();
            auto bi = b.begin();
            while (ai != a.end() && bi != b.end()) {
                if (*ai < *bi) ++ai;
                else if (*bi < *ai) ++bi;
                else { ++count; ++ai; ++bi; }
            }
            profile.push_back(count);
        }
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

}  // namespace fr
