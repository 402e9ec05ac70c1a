#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ddhooks/asymptotics.hpp"
#include "ddhooks/enumerate.hpp"
#include "ddhooks/generating.hpp"
#include "ddhooks/json_io.hpp"
#include "ddhooks/littlewood.hpp"
#include "ddhooks/partition.hpp"
#include "ddhooks/stats.hpp"
#include "ddhooks/verify.hpp"

using namespace ddhooks;

namespace {

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InvalidArgument("cannot open output file", path);
        f << text;
    }
    void emit(const Json& j) const { emit(j.dump(2) + "\n"); }
    bool csv() const { return format == "csv"; }
};

struct Options {
    int t = 2;
    int hooks_t = 0;
    int size = 0;
    int order = 10;
    std::string x;
    std::string cls = "dd";
    std::string stat = "nt";
    std::string gen = "F";
    std::string partition;
    std::vector<int> ns;
    bool hat = false;
    bool cross_check = false;
    bool unchecked = false;
    int threads = 1;
    int max_size = 24;
    int max_t = 6;
    Output out;
};

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw InvalidPartition("parts must be integers", text);
        }
    }
    return Partition(parts);
}

Json matrix_json(const HookMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(row);
    return a;
}

Json partition_json(const Partition& p) { return p.parts(); }

int max_entry(const HookMatrix& m) {
    int best = 0;
    for (const auto& row : m)
        for (int v : row) best = std::max(best, v);
    return best;
}

void run_hooks(const Options& o) {
    const Partition p = parse_partition(o.partition);
    const auto h = hook_lengths(p);
    const bool strict = is_strict(p);
    const bool dd = is_doubled_distinct(p);
    const int top = max_entry(h);
    std::vector<int> ts;
    if (o.hooks_t > 0) ts.push_back(o.hooks_t);
    else
        for (int t = 1; t <= top; ++t) ts.push_back(t);

    HookMatrix sh;
    if (strict) sh = shifted_hook_lengths(StrictPartition(p.parts()));

    if (o.out.csv()) {
        std::ostringstream os;
        os << "kind,i,j,value\n";
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < h[i].size(); ++j) os << "hook," << i + 1 << ',' << j + 1 << ',' << h[i][j] << '\n';
        for (std::size_t i = 0; i < sh.size(); ++i)
            for (std::size_t j = 0; j < sh[i].size(); ++j)
                os << "shifted_hook," << i + 1 << ',' << i + j + 1 << ',' << sh[i][j] << '\n';
        for (int t : ts) {
            os << "n_t," << t << ",," << count_t_hooks(p, t) << '\n';
            if (dd) os << "nhat_t," << t << ",," << count_t_hooks_above_diagonal(p, t) << '\n';
            if (strict) os << "s_t," << t << ",," << count_t_shifted_hooks(StrictPartition(p.parts()), t) << '\n';
        }
        o.out.emit(os.str());
        return;
    }
    Json counts = Json::array();
    for (int t : ts) {
        Json c = {{"t", t}, {"n_t", count_t_hooks(p, t)}};
        if (dd) c["nhat_t"] = count_t_hooks_above_diagonal(p, t);
        if (strict) c["s_t"] = count_t_shifted_hooks(StrictPartition(p.parts()), t);
        counts.push_back(c);
    }
    Json j = {{"partition", partition_json(p)},
              {"size", p.size()},
              {"conjugate", partition_json(conjugate(p))},
              {"strict", strict},
              {"doubled_distinct", dd},
              {"hooks", matrix_json(h)}};
    if (strict) j["shifted_hooks"] = matrix_json(sh);
    j["counts"] = counts;
    o.out.emit(j);
}

Json array_json(const TwoRowedArray& a) { return {{"top", a.top}, {"bottom", a.bottom}}; }

void run_decompose(const Options& o) {
    const Partition p = parse_partition(o.partition);
    const int t = o.t > 0 ? o.t : 2;
    const auto f = frobenius(p);
    const auto arrays = quotient_arrays(p, t);
    const auto d = littlewood_decompose(p, t);

    Json wright = Json::array();
    for (std::size_t j = 0; j < arrays.size(); ++j)
        wright.push_back({{"residue", j}, {"array", array_json(arrays[j])}, {"image", partition_json(wright_map(arrays[j]))}});
    Json quotient = Json::array();
    for (const auto& q : d.quotient) quotient.push_back(partition_json(q));

    Json j = {{"partition", partition_json(p)},
              {"t", t},
              {"frobenius", {{"top", f.top}, {"bottom", f.bottom}}},
              {"wright", wright},
              {"core", partition_json(d.core)},
              {"quotient", quotient},
              {"charges", runner_charges(p, t)}};
    if (is_doubled_distinct(p)) {
        const auto c = check_dd_theorem(p, t);
        j["dd_theorem"] = {{"DD1", c.core_in_dd_t_core},
                           {"DD2", c.conjugate_pairs && c.zeroth_is_dd && c.middle_is_sc},
                           {"DD3", c.size_identity},
                           {"DD4", c.hook_count}};
        j["undoubled"] = partition_json(undouble(p).as_partition());
        j["shifted_quotient_formula"] = verify_shifted_quotient_formula(undouble(p), t);
    }
    if (o.out.csv()) {
        std::ostringstream os;
        os << "key,value\n";
        for (const auto& [k, v] : j.items()) os << k << ',' << csv_field(v.dump()) << '\n';
        o.out.emit(os.str());
        return;
    }
    o.out.emit(j);
}

void run_series(const Options& o) {
    const GenName g = parse_gen_name(o.gen);
    if (o.order < 0) throw InvalidArgument("order must be nonnegative");
    const auto N = static_cast<std::size_t>(o.order);
    Json coeffs = Json::array();
    std::ostringstream csv;
    if (o.x.empty()) {
        const auto ring = g == GenName::SCn1hat ? symbolic_ring(Radicand::OneMinusX) : symbolic_ring();
        const auto s = generate(g, ring, o.t, N);
        csv << "q_exponent,x_power,coefficient\n";
        for (std::size_t m = 0; m <= N; ++m) {
            const auto p = extract_poly(s, m);
            coeffs.push_back(poly_json(p));
            for (std::size_t i = 0; i < p.coeffs().size(); ++i)
                if (sgn(p.coeffs()[i]) != 0) csv << m << ',' << i << ',' << rational_string(p.coeffs()[i]) << '\n';
        }
    } else {
        const mpq_class x = parse_rational(o.x);
        const auto kind = g == GenName::SCn1hat ? Radicand::OneMinusX : Radicand::OneMinusXSquared;
        const auto s = generate(g, scaled_ring(x, kind, 2 * N + 4), o.t, N);
        csv << "q_exponent,value\n";
        for (std::size_t m = 0; m <= N; ++m) {
            const auto v = extract_value(s, m);
            coeffs.push_back(rational_string(v));
            csv << m << ',' << rational_string(v) << '\n';
        }
    }
    if (o.out.csv()) return o.out.emit(csv.str());
    Json j = {{"gen", to_string(g)}, {"t", o.t}, {"order", o.order}};
    if (!o.x.empty()) j["x"] = rational_string(parse_rational(o.x));
    j["coefficients"] = coeffs;
    o.out.emit(j);
}

void run_dist(const Options& o) {
    const auto cls = parse_partition_class(o.cls);
    const auto stat = parse_statistic(o.stat, o.t);
    const auto d = exact_distribution(o.size, cls, stat, DistSource::Auto, o.cross_check);
    if (o.out.csv()) return o.out.emit(distribution_csv(d));
    Json j = distribution_json(d);
    try {
        j["kolmogorov_distance"] = real_string(kolmogorov_distance_to_normal(d));
    } catch (const DegenerateDistribution&) {
        j["kolmogorov_distance"] = nullptr;
    }
    o.out.emit(j);
}

std::vector<int> half_sizes(const Options& o, std::vector<int> fallback) {
    auto ns = o.ns.empty() ? std::move(fallback) : o.ns;
    for (int n : ns)
        if (n < 1) throw InvalidArgument("n must be positive", std::to_string(n));
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

void run_moments(const Options& o) {
    const auto ns = half_sizes(o, {100, 250, 500, 1000});
    const auto table = dd_moments(o.t, static_cast<std::size_t>(ns.back()), o.hat);
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "t,n,hat,count,m1,m2,m1_log_ratio,m2_log_ratio,mean,mean_formula,variance,variance_formula\n";
    for (int n : ns) {
        const auto& c = table.count[n];
        mpq_class mean(table.m1[n], c), second(table.m2[n], c);
        mean.canonicalize();
        second.canonicalize();
        const mpq_class var = second - mean * mean;
        const auto mv = mean_var_asymptotic(o.t, n, o.hat);
        std::string r1 = "", r2 = "";
        if (!o.hat) {
            r1 = real_string(log_of(table.m1[n]) - log_moment_asymptotic(o.t, n, 1));
            r2 = real_string(log_of(table.m2[n]) - log_moment_asymptotic(o.t, n, 2));
        }
        Json row = {{"n", n},
                    {"size", 2 * n},
                    {"count", c.get_str()},
                    {"m1", table.m1[n].get_str()},
                    {"m2", table.m2[n].get_str()},
                    {"mean", rational_string(mean)},
                    {"mean_decimal", real_string(mean.get_d())},
                    {"mean_formula", real_string(mv.mean)},
                    {"variance", rational_string(var)},
                    {"variance_decimal", real_string(var.get_d())},
                    {"variance_formula", real_string(mv.variance)}};
        if (!o.hat) {
            row["m1_log_ratio"] = r1;
            row["m2_log_ratio"] = r2;
        }
        rows.push_back(row);
        csv << o.t << ',' << n << ',' << (o.hat ? 1 : 0) << ',' << c.get_str() << ',' << table.m1[n].get_str() << ','
            << table.m2[n].get_str() << ',' << r1 << ',' << r2 << ',' << real_string(mean.get_d()) << ','
            << real_string(mv.mean) << ',' << real_string(var.get_d()) << ',' << real_string(mv.variance) << '\n';
    }
    if (o.out.csv()) return o.out.emit(csv.str());
    o.out.emit(Json{{"t", o.t}, {"hat", o.hat}, {"rows", rows}});
}

void run_asymp(const Options& o) {
    const auto ns = half_sizes(o, {250, 500, 1000, 2000});
    const mpq_class x = parse_rational(o.x.empty() ? "1" : o.x);
    const Real xr = x.get_d();
    // contract check before the expensive expansion
    if (!o.unchecked) {
        if (o.hat) ddhat_asymptotic(o.t, 1, xr);
        else dd_asymptotic(o.t, 1, xr);
    }
    const auto values = dd_values(o.t, x, static_cast<std::size_t>(ns.back()), o.hat);
    std::vector<ComparisonRow> rows;
    for (int n : ns) {
        const auto e = o.hat ? ddhat_main_term(o.t, n, xr) : dd_main_term(o.t, n, xr);
        rows.push_back({o.t, n, rational_string(x), log_of(values[n]), e.log_value});
    }
    if (o.out.csv()) return o.out.emit(comparison_csv(rows));
    const bool holds = o.hat ? ddhat_hypothesis_holds(o.t, xr) : dd_hypothesis_holds(o.t, xr);
    o.out.emit(Json{{"t", o.t}, {"x", rational_string(x)}, {"hat", o.hat}, {"hypothesis_holds", holds},
                    {"rows", comparison_json(rows)}});
}

int run_verify(const Options& o) {
    auto results = oracle_sweep(o.max_t, o.max_size, o.threads);
    const auto bij = bijection_sweep(BijectionScale{}.capped(o.max_size, o.max_t), o.threads);
    results.insert(results.end(), bij.begin(), bij.end());
    const bool ok = all_passed(results);
    if (o.out.csv()) o.out.emit(check_results_csv(results));
    else
        o.out.emit(Json{{"max_size", o.max_size}, {"max_t", o.max_t}, {"passed", ok},
                        {"checks", check_results_json(results)}});
    return ok ? 0 : 1;
}

std::string quote_arg(const std::string& a) {
    if (!a.empty() && a.find_first_of(" \t\"'\\$") == std::string::npos) return a;
    std::string out = "'";
    for (char c : a) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Hook statistics of doubled distinct partitions: tables, series, distributions and asymptotics"};
    app.require_subcommand(1);

    auto add_output = [&](CLI::App* c) {
        c->add_option("--format", o.out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", o.out.path, "output file (default stdout)");
        c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* hooks = app.add_subcommand("hooks", "hook and shifted hook matrices with t-hook counts");
    hooks->add_option("--partition", o.partition, "parts separated by commas")->required();
    hooks->add_option("--t", o.hooks_t, "only this t (0 = all)");
    add_output(hooks);

    auto* decompose = app.add_subcommand("decompose", "Frobenius symbol, Wright images, core and quotient");
    decompose->add_option("--partition", o.partition, "parts separated by commas")->required();
    decompose->add_option("--t", o.t, "quotient order");
    add_output(decompose);

    auto* series = app.add_subcommand("series", "expand a generating function to order N");
    series->add_option("--gen", o.gen, "F, Fhat, F1, han, tcore, ddn1hat, scn1hat, scn1");
    series->add_option("--t", o.t);
    series->add_option("--order", o.order, "largest q exponent");
    series->add_option("--x", o.x, "specialize x to a rational p/q");
    add_output(series);

    auto* dist = app.add_subcommand("dist", "exact distribution of a hook statistic");
    dist->add_option("--t", o.t);
    dist->add_option("--size", o.size, "partition size")->required();
    dist->add_option("--class", o.cls, "all, strict, dd, sc, tcore:T, ddtcore:T");
    dist->add_option("--stat", o.stat, "nt, nhat, st, n1");
    dist->add_flag("--cross-check", o.cross_check, "also run the enumeration oracle");
    add_output(dist);

    auto* moments = app.add_subcommand("moments", "exact moments against their expansions");
    moments->add_option("--t", o.t);
    moments->add_option("--n", o.ns, "half sizes n (size 2n)");
    moments->add_flag("--hat", o.hat, "n-hat_t instead of n_t");
    add_output(moments);

    auto* asymp = app.add_subcommand("asymp", "log-ratio of exact coefficients to the main term");
    asymp->add_option("--t", o.t);
    asymp->add_option("--x", o.x, "rational p/q");
    asymp->add_option("--n", o.ns, "half sizes n (size 2n)");
    asymp->add_flag("--hat", o.hat, "n-hat_t instead of n_t");
    asymp->add_flag("--unchecked", o.unchecked, "evaluate the main term outside the proven range");
    add_output(asymp);

    auto* verify = app.add_subcommand("verify", "oracle and bijection sweeps; nonzero exit on mismatch");
    verify->add_option("--max-size", o.max_size);
    verify->add_option("--max-t", o.max_t);
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_json("UsageError", e.what()).dump() << '\n';
        return 2;
    }

    std::string invocation = "ddhooks";
    for (int i = 1; i < argc; ++i) invocation += " " + quote_arg(argv[i]);
    std::cerr << "# " << invocation << '\n';

    try {
        if (*hooks) run_hooks(o);
        else if (*decompose) run_decompose(o);
        else if (*series) run_series(o);
        else if (*dist) run_dist(o);
        else if (*moments) run_moments(o);
        else if (*asymp) run_asymp(o);
        else if (*verify) return run_verify(o);
    } catch (const Error& e) {
        std::cout << error_json(e).dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cout << error_json("InternalError", e.what()).dump() << '\n';
        return 3;
    }
    return 0;
}
