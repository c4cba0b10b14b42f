// Copyright 2026 The clockwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clockwalk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "clockwalk/analysis.hpp"
#include "clockwalk/errors.hpp"
#include "clockwalk/linalg.hpp"
#include "clockwalk/oracle.hpp"

namespace clockwalk {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kRawOrbitCap = std::size_t{1} << 20;
constexpr double kLeakageLimit = 1e-10;

std::vector<double> complex_magnitudes(const std::vector<std::complex<double>>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& z : v) {
        out.push_back(std::abs(z));
    }
    return out;
}

Word parse_input_bits(const std::string& bits, std::size_t expected, std::string_view what) {
    if (bits.empty()) {
        return 0;
    }
    if (bits.size() != expected) {
        throw ValidationError("input has " + std::to_string(bits.size()) + " bits but the " + std::string(what) +
                              " has " + std::to_string(expected));
    }
    return BitString::parse(bits).word();
}

}  // namespace

SchemaChoice parse_schema_choice(std::string_view text) {
    if (text == "raw") {
        return {SchemaMode::Raw, 1};
    }
    if (text == "toggle") {
        return {SchemaMode::Toggle, 1};
    }
    constexpr std::string_view prefix = "counter:";
    if (text.substr(0, prefix.size()) == prefix) {
        const auto digits = text.substr(prefix.size());
        unsigned c = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
        if (ec == std::errc{} && end == digits.data() + digits.size() && c >= 1 && c <= 16) {
            return {SchemaMode::Counter, c};
        }
    }
    throw ValidationError("unknown schema '" + std::string(text) + "' (expected raw, toggle or counter:c, 1 <= c <= 16)");
}

std::string to_string(const SchemaChoice& choice) {
    switch (choice.mode) {
        case SchemaMode::Raw:
            return "raw";
        case SchemaMode::Toggle:
            return "toggle";
        case SchemaMode::Counter:
            return "counter:" + std::to_string(choice.counter_bits);
    }
    return "?";
}

std::optional<Wire> Pipeline::output_wire() const {
    if (schema) {
        return schema->descriptor.output_wire();
    }
    return std::nullopt;
}

ReversibleCircuit build_composite(const ReversibleCircuit& source, const SchemaChoice& choice,
                                  std::optional<Schema>* schema_out) {
    std::optional<Schema> schema;
    switch (choice.mode) {
        case SchemaMode::Raw:
            break;
        case SchemaMode::Toggle:
            schema = build_toggle_schema(source);
            break;
        case SchemaMode::Counter:
            schema = build_counter_schema(source, choice.counter_bits);
            break;
    }
    ReversibleCircuit composite = schema ? schema->circuit : source;
    if (schema_out) {
        *schema_out = std::move(schema);
    }
    return composite;
}

Pipeline prepare(const RunConfig& config) {
    if (config.max_dimension == 0) {
        throw ValidationError("dimension cap must be positive");
    }
    ReversibleCircuit source = load_circuit(config.circuit_path);
    std::optional<Schema> schema;
    ReversibleCircuit composite = build_composite(source, config.schema, &schema);
    ClockOperator op = build_forward_operator(composite);

    Word work = 0;
    std::size_t cap = kRawOrbitCap;
    if (schema) {
        const auto& desc = schema->descriptor;
        work = schema_register(desc, parse_input_bits(config.input_bits, desc.input_wires.size(), "predicate"), 0);
        cap = default_orbit_cap(op.clock_width(), desc);
    } else {
        work = parse_input_bits(config.input_bits, composite.width(), "circuit");
    }
    Orbit orbit = enumerate_orbit(op, op.initial_state(work), cap);
    return Pipeline{std::move(source), std::move(schema), std::move(composite), std::move(op), work, std::move(orbit)};
}

ordered_json structure_json(const StructureReport& r) {
    ordered_json j;
    j["symmetric"] = r.is_symmetric;
    j["entries_01"] = r.entries_01;
    j["zero_diagonal"] = r.zero_diagonal;
    j["max_term_support"] = r.max_term_support;
    j["max_entry"] = r.max_entry;
    j["full_dimension"] = r.full_dimension;
    j["edges"] = r.edges;
    return j;
}

ordered_json run_analysis(const Pipeline& pl, const RunConfig& config) {
    const std::size_t d = pl.orbit.dimension();
    const std::size_t s = pl.op.clock_width();
    ordered_json doc;
    doc["circuit"] = config.circuit_path;
    doc["schema"] = to_string(config.schema);
    doc["input"] = config.input_bits;
    doc["m"] = pl.op.work_width();
    doc["s"] = s;
    doc["d"] = d;
    if (pl.schema) {
        const auto& desc = pl.schema->descriptor;
        doc["r"] = desc.repetitions;
        doc["c"] = desc.counter_bits;
        doc["classification"] = std::string(to_string(classify_instance(pl.orbit, desc)));
    } else {
        doc["r"] = nullptr;
        doc["c"] = nullptr;
        doc["classification"] = nullptr;
    }
    if (d % 2 != 0) {
        throw ValidationError("orbit dimension " + std::to_string(d) + " is odd; the analysis needs even d");
    }

    // Spectrum of A on the orbit: dense diagonalization against 2 cos(2 pi k / d).
    const Eigen::MatrixXd restricted = restrict_to_orbit(pl.op, pl.orbit);
    const auto eig = linalg::diagonalize(restricted);
    std::vector<double> expected = restricted_spectrum(d).eigenvalues;
    std::sort(expected.begin(), expected.end());
    double spectrum_error = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        spectrum_error = std::max(spectrum_error, std::abs(eig.values[static_cast<Eigen::Index>(k)] - expected[k]));
    }
    doc["orbit_spectrum_max_error"] = spectrum_error;

    const DensityMatrix rho_bar = time_average_orbit(d);
    doc["entropy_bits"] = von_neumann_entropy(rho_bar);
    doc["closed_form_entropy_bits"] = closed_form_entropy(d);

    const auto dist = occupation_distribution(d);
    doc["occupation"] = dist.p;
    doc["fourier_magnitudes"] = complex_magnitudes(dist.fourier);
    const auto parity = fourier_parity(dist);
    ordered_json fourier;
    fourier["even_observed"] = parity.even_max;
    fourier["even_claimed"] = 1.0 / static_cast<double>(d);
    fourier["even_discrepancy"] = parity.even_max - 1.0 / static_cast<double>(d);
    fourier["odd_max"] = parity.odd_max;
    doc["fourier_even"] = fourier;

    const auto ds = ds_bound(dist);
    doc["tv"] = ds.tv;
    doc["ds_bound"] = ds.bound;
    doc["ds_inequality_holds"] = ds.inequality_holds();
    doc["tv_squared"] = ds.tv * ds.tv;
    doc["claimed_tv_squared_cap"] = ds.claimed_tv_squared_cap;
    doc["l1"] = ds.l1;
    doc["claimed_l1_cap"] = ds.claimed_l1_cap;
    doc["within_claimed_l1_cap"] = ds.within_claimed_l1_cap();

    if (auto wire = pl.output_wire()) {
        const auto qubit = reduce_output_qubit(pl.orbit, dist, *wire);
        doc["output_occupation_p"] = qubit(1, 1).real();
    } else {
        doc["output_occupation_p"] = nullptr;
    }
    const auto [lo, hi] = occupation_interval(d);
    doc["interval"] = {lo, hi};

    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
    psi0[0] = 1.0;
    const auto dist0 = eigenstate_distance(psi0, restricted.cast<std::complex<double>>());
    ordered_json ed;
    ed["distance"] = dist0.distance;
    ed["geometric_squared_distance"] = dist0.geometric_squared_distance;
    ed["max_possible"] = dist0.max_possible;
    ed["distinct_eigenvalues"] = dist0.distinct_eigenvalues;
    doc["initial_eigenstate_distance"] = ed;
    return doc;
}

ordered_json run_report(const RunConfig& config) {
    const Pipeline pl = prepare(config);
    ordered_json doc = run_analysis(pl, config);

    const std::uint64_t wires = pl.op.work_width() + pl.op.clock_width();
    const bool fits = wires < 63 && (std::uint64_t{1} << wires) <= config.max_dimension;
    if (fits) {
        doc["structure"] = structure_json(verify_structure(pl.op, config.max_dimension));
    } else {
        doc["structure"] = {{"skipped", "full dimension 2^" + std::to_string(wires) + " exceeds cap " +
                                            std::to_string(config.max_dimension)}};
    }

    if (config.oracle) {
        const SpectralOracle oracle(pl.op, config.max_dimension);
        const BasisState initial = pl.orbit[0];
        const DensityMatrix full = oracle.time_average(initial);
        const double leakage = orbit_leakage(full, pl.op, pl.orbit);
        if (leakage > kLeakageLimit) {
            throw InvariantViolation("oracle time average leaks out of the orbit (" + std::to_string(leakage) + ")");
        }
        const DensityMatrix on_orbit = restrict_to_orbit_states(full, pl.op, pl.orbit);
        const DensityMatrix analytic = fourier_to_orbit_states(time_average_orbit(pl.orbit.dimension()));

        ordered_json o;
        o["full_dimension"] = oracle.dimension();
        o["distinct_eigenvalues"] = oracle.clustering().clusters.size();
        o["ambiguous_gaps"] = oracle.clustering().ambiguous_gaps;
        o["orbit_leakage"] = leakage;
        o["trace_distance_to_orbit_average"] = trace_distance(on_orbit, analytic);
        o["entropy_bits"] = von_neumann_entropy(full);
        std::vector<ConvergencePoint> points;
        ordered_json conv = ordered_json::array();
        for (double t : config.horizons) {
            const auto res = oracle.finite_time_average(initial, t);
            points.push_back({t, res.deviation});
            conv.push_back({{"T", t}, {"deviation", res.deviation}});
        }
        o["convergence"] = conv;
        o["loglog_slope"] = points.size() >= 2 ? ordered_json(fit_loglog(points).slope) : ordered_json(nullptr);
        doc["oracle"] = o;
    }
    return doc;
}

ordered_json round_floats(const ordered_json& doc) {
    if (doc.is_number_float()) {
        const double v = doc.get<double>();
        if (!std::isfinite(v)) {
            return nullptr;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        double r = std::strtod(buf, nullptr);
        return r == 0.0 ? 0.0 : r;  // no negative zero
    }
    if (doc.is_array() || doc.is_object()) {
        ordered_json out = doc;
        for (auto it = out.begin(); it != out.end(); ++it) {
            *it = round_floats(*it);
        }
        return out;
    }
    return doc;
}

std::string dump_report(const ordered_json& doc) {
    return round_floats(doc).dump(2) + "\n";
}

void write_occupation_csv(std::ostream& out, const ordered_json& report) {
    const auto p = round_floats(report.at("occupation"));
    out << "j,P\n";
    for (std::size_t j = 0; j < p.size(); ++j) {
        out << j << ',' << p[j].dump() << '\n';
    }
}

void write_convergence_csv(std::ostream& out, const ordered_json& report) {
    const auto conv = round_floats(report.at("oracle").at("convergence"));
    out << "T,deviation\n";
    for (const auto& row : conv) {
        out << row.at("T").dump() << ',' << row.at("deviation").dump() << '\n';
    }
}

namespace {

void write_file(const std::filesystem::path& path, const auto& writer) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot write '" + path.string() + "'");
    }
    writer(f);
    if (!f) {
        throw ValidationError("error writing '" + path.string() + "'");
    }
}

}  // namespace

void emit_report(const ordered_json& report, const RunConfig& config, std::ostream& fallback) {
    auto primary = [&](std::ostream& os) {
        if (config.format == OutputFormat::Csv) {
            write_occupation_csv(os, report);
        } else {
            os << dump_report(report);
        }
    };
    if (config.out_path.empty()) {
        primary(fallback);
        return;
    }
    const std::filesystem::path out(config.out_path);
    write_file(out, primary);
    if (config.format == OutputFormat::Json) {
        auto sidecar = [&](std::string_view suffix) {
            auto p = out;
            return p.replace_extension().concat(suffix);
        };
        write_file(sidecar(".occupation.csv"), [&](std::ostream& os) { write_occupation_csv(os, report); });
        if (report.contains("oracle")) {
            write_file(sidecar(".convergence.csv"), [&](std::ostream& os) { write_convergence_csv(os, report); });
        }
    }
}

}  // namespace clockwalk
