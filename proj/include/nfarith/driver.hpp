#pragma once

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nfarith/arith_functions.hpp"
#include "nfarith/asymptotics.hpp"
#include "nfarith/dirichlet_series.hpp"
#include "nfarith/errors.hpp"
#include "nfarith/lfunctions.hpp"
#include "nfarith/number_field.hpp"
#include "nfarith/sieve.hpp"

namespace nfarith {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_FINDING = 1,   // an identity was violated outside its exceptional set
    EXIT_USAGE = 2,     // config or argument errors
    EXIT_RESOURCE = 3,  // memory budget or similar resource limits
};

struct RunConfig {
    std::vector<std::string> fields;
    std::string fn;
    uint64_t xmax = 10000;
    uint64_t nmax = 10000;
    double grid_ratio = 1.1892071150027210667;  // 2^(1/4)
    unsigned threads = 1;
    uint64_t mem_limit = 0;  // bytes; 0 = unlimited
    std::string out;
    std::string overrides_file;

    // The hash covers the experiment identity only; resource knobs (threads,
    // memory limit, output path) deliberately excluded so reruns match.
    std::string canonical() const {
        std::ostringstream os;
        os << "fields=";
        for (size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
        os << ";fn=" << fn << ";xmax=" << xmax << ";nmax=" << nmax;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", grid_ratio);
        os << ";grid-ratio=" << buf;
        os << ";overrides=" << overrides_file;
        return os.str();
    }

    uint64_t config_hash() const {
        // FNV-1a 64
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : canonical()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Plain-text key=value config files; '#' comments. Flags override afterwards.
inline RunConfig parse_config_file(std::istream& in) {
    RunConfig cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        try {
            if (key == "fields") {
                std::stringstream ss(val);  // whitespace-separated (poly specs contain commas)
                std::string item;
                while (ss >> item) cfg.fields.push_back(item);
            } else if (key == "fn") cfg.fn = val;
            else if (key == "xmax") cfg.xmax = std::stoull(val);
            else if (key == "nmax") cfg.nmax = std::stoull(val);
            else if (key == "grid-ratio") cfg.grid_ratio = std::stod(val);
            else if (key == "threads") cfg.threads = unsigned(std::stoul(val));
            else if (key == "mem-limit") cfg.mem_limit = std::stoull(val);
            else if (key == "out") cfg.out = val;
            else if (key == "overrides") cfg.overrides_file = val;
            else throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
        }
    }
    return cfg;
}

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct OutputFile {
    std::ofstream file;
    std::ostream* os;

    explicit OutputFile(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os = &fallback;
        } else {
            file.open(path);
            if (!file) throw UsageError("cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

inline std::vector<FieldHandle> resolve_fields(const RunConfig& cfg) {
    std::map<uint64_t, SplittingType> table;
    if (!cfg.overrides_file.empty()) {
        std::ifstream in(cfg.overrides_file);
        if (!in) throw UsageError("cannot open overrides file '" + cfg.overrides_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        table = parse_override_table(ss.str());
    }
    std::vector<FieldHandle> out;
    for (const auto& spec : cfg.fields) {
        FieldHandle K = parse_field_spec(spec);
        if (!table.empty() &&
            (K->family == FieldFamily::generic || K->family == FieldFamily::compositum)) {
            K = with_overrides(K, table);
        }
        out.push_back(std::move(K));
    }
    return out;
}

// Pole-order multiplier m for a tau-type product: the ratio of the summand to
// a_comp at a completely split prime. Matches (k^2 d + k)/2 per tau2 factor
// and (2d)^(l-1)-style exponents for ideal-count powers.
inline uint64_t tau_pole_multiplier(const ArithFn& fn) {
    u128 numer = 1;
    for (const auto& f : fn.factors) {
        uint64_t d = f.field->degree;
        u128 v = 1;
        switch (f.kind) {
            case FnKind::IdealCount:
                v = d;
                break;
            case FnKind::TauK:
                v = u128(f.param) * d;
                break;
            case FnKind::TauKSquare: {
                // tau_k(p^2) = ((k^2 d + k)/2) a(p) and a(p) = d at split p
                u128 t = u128(f.param) * f.param * d + f.param;
                if (t % 2) throw UsageError("tau2 main term needs k^2 d + k even (odd degree)");
                v = t / 2 * d;
                break;
            }
            case FnKind::SigmaA:
                throw UsageError("sigma factors have no tau-type main term");
        }
        for (uint32_t i = 0; i < f.power; ++i) numer *= v;
    }
    u128 dcomp = 1;
    for (const auto& K : fn.distinct_fields()) dcomp *= K->degree;
    if (numer % dcomp != 0) throw UsageError("summand is not a tau-type configuration");
    u128 m = numer / dcomp;
    if (m >> 63) throw UsageError("pole multiplier overflows");
    return uint64_t(m);
}

inline FieldHandle compositum_of(const std::vector<FieldHandle>& fields) {
    FieldHandle comp = fields.at(0);
    for (size_t i = 1; i < fields.size(); ++i) comp = compositum(comp, fields[i]);
    return comp;
}

// Dirichlet coefficients of the descriptor, exact, up to N.
inline TruncatedDirichletSeries coefficients_series(const ArithFn& fn, uint64_t N,
                                                    const SpfSieve& spf, unsigned threads) {
    auto seq = sieve_multiplicative<BigInt>(fn, N, spf, threads);
    TruncatedDirichletSeries s(N);
    for (uint64_t n = 1; n <= N; ++n) s.a[n] = Rational(seq.f[n]);
    return s;
}

struct MainTermInfo {
    std::function<double(double)> M;
    bool leading_term_only = false;
    std::string description;
    std::vector<std::pair<std::string, LValue>> constants;
};

// Select and assemble the predicted main term for a descriptor.
inline MainTermInfo make_main_term(const ArithFn& fn, const RunConfig& cfg, const SpfSieve& spf) {
    MainTermInfo info;
    bool all_sigma = true, any_sigma = false;
    for (const auto& f : fn.factors) {
        if (f.kind == FnKind::SigmaA) any_sigma = true;
        else all_sigma = false;
    }
    if (any_sigma && !all_sigma)
        throw UsageError("descriptor mixes sigma with tau factors; no main term available");

    if (all_sigma && fn.factors.size() == 1 && fn.factors[0].power == 1) {
        auto mt = main_term_sigma(*fn.factors[0].field, fn.factors[0].param);
        info.M = [mt](double x) { return mt(x); };
        info.description = "c_K zeta(1+a)/(1+a) x^(1+a)";
        info.constants = {{"residue(" + fn.factors[0].field->describe() + ")", mt.residue},
                          {"zeta(1+a)", mt.zeta_1a}};
        return info;
    }
    if (all_sigma && fn.factors.size() == 2 && fn.factors[0].power == 1 &&
        fn.factors[1].power == 1) {
        auto mt = main_term_sigma_pair(fn.factors[0].field, fn.factors[1].field,
                                       fn.factors[0].param, fn.factors[1].param);
        info.M = [mt](double x) { return mt(x); };
        info.description = "zeta(1+a+b) zeta_K1(1+b) zeta_K2(1+a) c_K1K2 x^(1+a+b)/(1+a+b)";
        info.constants = {{"zeta(1+a+b)", mt.zeta_ab},
                          {"zeta_K1(1+b)", mt.zK1},
                          {"zeta_K2(1+a)", mt.zK2},
                          {"residue(K1K2)", mt.residue12}};
        return info;
    }
    if (all_sigma) throw UsageError("sigma main terms support one or two unpowered factors");

    // tau-type configuration: leading coefficient c^m U(1) / (m-1)!
    uint64_t m = tau_pole_multiplier(fn);
    auto fields = fn.distinct_fields();
    FieldHandle comp = compositum_of(fields);
    LValue residue = residue_dedekind(*comp);
    TruncatedDirichletSeries U;
    if (m == 1 && fn.factors.size() == 1 && fn.factors[0].kind == FnKind::IdealCount &&
        fn.factors[0].power == 1) {
        U = TruncatedDirichletSeries::delta(cfg.nmax);
    } else {
        uint64_t N = cfg.nmax;
        ArithFn afn;
        afn.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, comp});
        auto L = coefficients_series(fn, N, spf, cfg.threads);
        auto Z = coefficients_series(afn, N, spf, cfg.threads);
        U = u_series(L, Z, uint32_t(m));
    }
    auto lt = leading_coeff_tau(residue, uint32_t(m), U);
    info.M = [lt](double x) { return lt(x); };
    info.leading_term_only = m > 1;
    info.description = "leading term c^m U(1)/(m-1)! x log^(m-1) x, m=" + std::to_string(m);
    info.constants = {{"residue(" + comp->describe() + ")", residue},
                      {"U(1) [truncation est " + fmt_double(lt.u_truncation_estimate) + "]",
                       LValue{lt.u_at_one, lt.u_truncation_estimate, "u-series"}}};
    return info;
}

}  // namespace detail

// ---- sum: sieve, main term, AsymptoticReport CSV --------------------------

template <class V>
int run_sum_typed(const RunConfig& cfg, std::ostream& os) {
    auto fields = detail::resolve_fields(cfg);
    ArithFn fn = parse_function_descriptor(cfg.fn, fields);
    uint64_t spf_bound = std::max(cfg.xmax, cfg.nmax);
    SpfSieve spf(spf_bound);
    auto info = detail::make_main_term(fn, cfg, spf);
    auto seq = sieve_multiplicative<V>(fn, cfg.xmax, spf, cfg.threads, cfg.mem_limit);
    auto grid = geometric_grid(cfg.xmax, cfg.grid_ratio);
    auto rep = error_term(seq, info.M, grid);
    rep.leading_term_only = info.leading_term_only;

    os << "x,S,M,delta,ratio\n";
    for (const auto& r : rep.rows) {
        os << r.x << ',' << r.S << ',' << detail::fmt_double(r.M) << ','
           << detail::fmt_double(r.delta) << ',' << detail::fmt_double(r.ratio) << '\n';
    }
    os << "# main_term: " << info.description
       << (rep.leading_term_only ? " (delta is up to lower-order main terms)" : "") << '\n';
    for (const auto& [name, v] : info.constants) {
        os << "# constant: " << name << " = " << detail::fmt_double(v.value) << " +- "
           << detail::fmt_double(v.abs_error) << " (" << v.method << ")\n";
    }
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.config_hash());
    os << "# config_hash=" << hash << '\n';
    return EXIT_OK;
}

inline int run_sum(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    detail::OutputFile out(cfg.out, fallback);
    auto fields = detail::resolve_fields(cfg);
    ArithFn fn = parse_function_descriptor(cfg.fn, fields);
    if (sieve_fits_i128(fn, cfg.xmax)) return run_sum_typed<i128>(cfg, out.stream());
    return run_sum_typed<BigInt>(cfg, out.stream());
}

// ---- moment: dyadic second moments and running exponent --------------------

inline int run_moment(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    detail::OutputFile out(cfg.out, fallback);
    std::ostream& os = out.stream();
    auto fields = detail::resolve_fields(cfg);
    ArithFn fn = parse_function_descriptor(cfg.fn, fields);
    uint64_t spf_bound = std::max(cfg.xmax, cfg.nmax);
    SpfSieve spf(spf_bound);
    auto info = detail::make_main_term(fn, cfg, spf);
    auto seq = sieve_multiplicative<i128>(fn, cfg.xmax, spf, cfg.threads, cfg.mem_limit);

    std::vector<uint64_t> Xs = {cfg.xmax / 4, cfg.xmax / 2, cfg.xmax};
    while (!Xs.empty() && Xs.front() < 16) Xs.erase(Xs.begin());
    auto moments = second_moment_checkpoints(seq, info.M, Xs);

    os << "X,moment,exponent\n";
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < Xs.size(); ++i) {
        pts.emplace_back(double(Xs[i]), moments[i]);
        double expo = std::numeric_limits<double>::quiet_NaN();
        if (pts.size() >= 2 && moments[i] > 0) expo = empirical_exponent(pts);
        os << Xs[i] << ',' << detail::fmt_double(moments[i]) << ','
           << detail::fmt_double(expo) << '\n';
    }
    os << "# main_term: " << info.description << '\n';
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.config_hash());
    os << "# config_hash=" << hash << '\n';
    return EXIT_OK;
}

// ---- useries: U coefficients + prime identity summary -----------------------

inline int run_useries(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    if (cfg.nmax > 100000) throw UsageError("useries: nmax <= 1e5 required");
    detail::OutputFile out(cfg.out, fallback);
    std::ostream& os = out.stream();
    auto fields = detail::resolve_fields(cfg);
    ArithFn fn = parse_function_descriptor(cfg.fn, fields);
    uint64_t m = detail::tau_pole_multiplier(fn);
    FieldHandle comp = detail::compositum_of(fn.distinct_fields());

    SpfSieve spf(cfg.nmax);
    auto L = detail::coefficients_series(fn, cfg.nmax, spf, cfg.threads);
    ArithFn afn;
    afn.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, comp});
    auto Z = detail::coefficients_series(afn, cfg.nmax, spf, cfg.threads);
    auto U = u_series(L, Z, uint32_t(m));

    write_series_csv(os, U);

    auto ram = ramified_primes(*comp, cfg.nmax);
    std::vector<uint64_t> failures;
    for (uint64_t p = 2; p <= cfg.nmax; ++p) {
        if (spf.is_prime(p) && U.a[p] != 0) failures.push_back(p);
    }
    bool contained = true;
    for (uint64_t p : failures) {
        bool found = false;
        for (uint64_t r : ram) {
            if (r == p) found = true;
        }
        if (!found) contained = false;
    }
    os << "# m=" << m << '\n';
    os << "# u1=" << U.a[1] << '\n';
    os << "# prime_failures=";
    for (size_t i = 0; i < failures.size(); ++i) os << (i ? " " : "") << failures[i];
    os << '\n';
    os << "# ramified=";
    for (size_t i = 0; i < ram.size(); ++i) os << (i ? " " : "") << ram[i];
    os << '\n';
    os << "# within_ramified=" << (contained ? "true" : "false") << '\n';
    auto diag = convergence_diagnostic(U);
    os << "# abs_partial_sums(s=" << detail::fmt_double(diag.s0) << ")=";
    for (size_t i = 0; i < diag.partial_sums.size(); ++i)
        os << (i ? " " : "") << detail::fmt_double(diag.partial_sums[i]);
    os << '\n';
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.config_hash());
    os << "# config_hash=" << hash << '\n';
    return contained ? EXIT_OK : EXIT_FINDING;
}

// ---- constants: main-term ingredients with provenance -----------------------

inline int run_constants(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    detail::OutputFile out(cfg.out, fallback);
    std::ostream& os = out.stream();
    auto fields = detail::resolve_fields(cfg);
    if (fields.empty()) throw UsageError("constants: at least one field required");
    os << "constant,field,value,abs_error,method\n";
    auto emit = [&](const std::string& what, const std::string& field, const LValue& v) {
        os << what << ',' << field << ',' << detail::fmt_double(v.value) << ','
           << detail::fmt_double(v.abs_error) << ',' << v.method << '\n';
    };
    for (const auto& K : fields) {
        LValue res = residue_dedekind(*K);
        emit("residue", K->describe(), res);
        if (K->family == FieldFamily::quadratic) {
            emit("L(1,chi)", K->describe(), dirichlet_L_one(K->quad_D));
            // numerical fallback cross-check, reported with its own error
            emit("residue-fallback", K->describe(), detail::residue_fallback(*K, 200000));
        }
        emit("zeta_K(2)", K->describe(), dedekind_zeta_value(*K, 2.0));
    }
    emit("zeta(2)", "-", riemann_zeta(2.0));
    emit("zeta(3)", "-", riemann_zeta(3.0));
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.config_hash());
    os << "# config_hash=" << hash << '\n';
    return EXIT_OK;
}

// ---- verify: the lemma suite -------------------------------------------------

struct VerifyFinding {
    std::string check;
    std::string field;
    uint64_t n;
    std::string lhs;
    std::string rhs;
    bool expected;  // lies in the documented exceptional set
};

struct VerifyResult {
    std::vector<VerifyFinding> findings;
    uint64_t negative_control_failures = 0;  // inert primes where the even-degree control fails (expected)
    bool ok() const {
        for (const auto& f : findings) {
            if (!f.expected) return false;
        }
        return negative_control_failures > 0;
    }
};

inline VerifyResult run_verify_suite(uint64_t bound, unsigned threads = 1) {
    (void)threads;
    VerifyResult vr;
    Factorizer factorizer(std::max<uint64_t>(bound, 1000));
    const auto& spf = factorizer.sieve();

    auto K1 = quadratic_field(-4);
    auto K2 = quadratic_field(5);
    auto cubic = cyclic_cubic_disc49();

    // compositum multiplicativity: a_K1K2(p) = a_K1(p) a_K2(p), coprime discriminants
    auto comp = compositum(K1, K2);
    for (uint64_t p = 2; p <= bound; ++p) {
        if (!spf.is_prime(p)) continue;
        uint64_t lhs = ideal_count_prime_power(*comp, p, 1);
        uint64_t rhs = ideal_count_prime_power(*K1, p, 1) * ideal_count_prime_power(*K2, p, 1);
        if (lhs != rhs)
            vr.findings.push_back({"compositum-lemma", comp->describe(), p, std::to_string(lhs),
                                   std::to_string(rhs), 20 % p == 0});
    }

    // divisor-ideal identity: tau_k(p^2) = ((k^2 d + k)/2) a(p) for the cyclic cubic, k in {2,3}
    for (uint32_t k : {2u, 3u}) {
        uint64_t mult = (uint64_t(k) * k * 3 + k) / 2;
        for (uint64_t p = 2; p <= bound; ++p) {
            if (!spf.is_prime(p)) continue;
            uint64_t lhs = tau_k_prime_power(*cubic, k, p, 2);
            uint64_t rhs = mult * ideal_count_prime_power(*cubic, p, 1);
            if (lhs != rhs)
                vr.findings.push_back({"divisor-ideal-lemma k=" + std::to_string(k),
                                       cubic->describe(), p, std::to_string(lhs),
                                       std::to_string(rhs), p == 7});
        }
    }

    // power identity: a(p)^k = d^(k-1) a(p) at unramified p, k in {2,3,4}
    for (const auto& K : {K1, cyclotomic_field(5), cubic}) {
        const BigInt& D = *K->field_disc;
        for (uint64_t p = 2; p <= bound; ++p) {
            if (!spf.is_prime(p) || D % p == 0) continue;
            uint64_t a = ideal_count_prime_power(*K, p, 1);
            for (uint32_t k : {2u, 3u, 4u}) {
                u128 lhs = 1;
                for (uint32_t i = 0; i < k; ++i) lhs *= a;
                u128 rhs = a;
                for (uint32_t i = 1; i < k; ++i) rhs *= K->degree;
                if (lhs != rhs)
                    vr.findings.push_back({"power-lemma k=" + std::to_string(k), K->describe(), p,
                                           to_string(i128(lhs)), to_string(i128(rhs)), false});
            }
        }
    }

    // quadratic oracle equivalence via the Dedekind path
    for (int64_t D : {-4, -3, 5, 8}) {
        auto Kq = quadratic_field(D);
        std::map<uint64_t, SplittingType> ov;
        for (uint64_t p : ramified_primes(*Kq, bound)) ov[p] = SplittingType{{SplittingPart{2, 1, 1}}};
        auto Kd = generic_field(Kq->poly, BigInt(D), true, std::move(ov),
                                "dedekind(quad:" + std::to_string(D) + ")");
        auto oracle = quadratic_ideal_count_oracle_sieve(D, bound);
        ArithFn fn;
        fn.factors.push_back(FnFactor{FnKind::IdealCount, 0, 1, Kd});
        auto seq = sieve_multiplicative<i128>(fn, bound, spf);
        for (uint64_t n = 1; n <= bound; ++n) {
            if (seq.f[n] != i128(oracle[n]))
                vr.findings.push_back({"quadratic-oracle", Kd->describe(), n,
                                       to_string(seq.f[n]), std::to_string(oracle[n]), false});
        }
    }

    // cyclotomic family rule vs generic Dedekind path, p not dividing t
    for (uint32_t t : {5u, 7u, 8u, 12u}) {
        auto Kc = cyclotomic_field(t);
        auto Kg = generic_field(Kc->poly, Kc->field_disc, true, {},
                                "dedekind(cyclo:" + std::to_string(t) + ")");
        uint64_t pb = std::min<uint64_t>(bound, 10000);
        for (uint64_t p = 2; p <= pb; ++p) {
            if (!spf.is_prime(p) || t % p == 0) continue;
            if (Kg->poly_disc % p == 0) continue;  // index primes go through overrides
            auto a = splitting_type(*Kc, p).uniform();
            auto b = splitting_type(*Kg, p).uniform();
            if (!b || *a != *b) {
                auto [e, f, g] = *a;
                std::string lhs = std::to_string(e) + "," + std::to_string(f) + "," + std::to_string(g);
                std::string rhs = "non-uniform";
                if (b) {
                    auto [e2, f2, g2] = *b;
                    rhs = std::to_string(e2) + "," + std::to_string(f2) + "," + std::to_string(g2);
                }
                vr.findings.push_back({"cyclotomic-rule", Kc->describe(), p, lhs, rhs, false});
            }
        }
    }

    // negative control: the divisor-ideal identity must fail at every inert prime of quad:-4
    for (uint64_t p = 2; p <= bound; ++p) {
        if (!spf.is_prime(p) || kronecker(-4, int64_t(p)) != -1) continue;
        uint64_t lhs = tau_k_prime_power(*K1, 2, p, 2);
        uint64_t rhs = 5 * ideal_count_prime_power(*K1, p, 1);
        if (lhs != rhs) {
            ++vr.negative_control_failures;
        } else {
            vr.findings.push_back({"negative-control", K1->describe(), p, std::to_string(lhs),
                                   std::to_string(rhs), false});
        }
    }
    return vr;
}

inline int run_verify(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    detail::OutputFile out(cfg.out, fallback);
    std::ostream& os = out.stream();
    auto vr = run_verify_suite(cfg.xmax, cfg.threads);
    os << "check,field,n,lhs,rhs,expected\n";
    for (const auto& f : vr.findings) {
        os << f.check << ',' << f.field << ',' << f.n << ',' << f.lhs << ',' << f.rhs << ','
           << (f.expected ? "yes" : "no") << '\n';
    }
    os << "# negative_control_failures=" << vr.negative_control_failures << '\n';
    os << "# status=" << (vr.ok() ? "ok" : "violations-found") << '\n';
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, cfg.config_hash());
    os << "# config_hash=" << hash << '\n';
    return vr.ok() ? EXIT_OK : EXIT_FINDING;
}

// ---- field-info and split ----------------------------------------------------

inline int run_field_info(const RunConfig& cfg, std::ostream& fallback = std::cout) {
    detail::OutputFile out(cfg.out, fallback);
    std::ostream& os = out.stream();
    for (const auto& K : detail::resolve_fields(cfg)) {
        os << "field: " << K->describe() << '\n';
        os << "  degree: " << K->degree << '\n';
        os << "  polynomial:";
        for (const auto& c : K->poly.c) os << ' ' << c;
        os << " (low degree first)\n";
        os << "  poly_disc: " << K->poly_disc << '\n';
        if (K->field_disc) os << "  field_disc: " << *K->field_disc << '\n';
        os << "  galois: " << (K->galois ? "true" : "false") << '\n';
        if (!K->overrides.empty()) {
            os << "  overrides:";
            for (const auto& [p, st] : K->overrides) {
                os << ' ' << p << ':';
                for (size_t i = 0; i < st.parts.size(); ++i)
                    os << (i ? ";" : "") << st.parts[i].e << ',' << st.parts[i].f << ','
                       << st.parts[i].count;
            }
            os << '\n';
        }
    }
    return EXIT_OK;
}

inline int run_split(const RunConfig& cfg, uint64_t p, std::ostream& fallback = std::cout) {
    detail::OutputFile out(cfg.out, fallback);
    std::ostream& os = out.stream();
    for (const auto& K : detail::resolve_fields(cfg)) {
        auto st = splitting_type(*K, p);
        os << K->describe() << " at p=" << p << ":";
        for (const auto& part : st.parts)
            os << " (e=" << part.e << ",f=" << part.f << ")x" << part.count;
        os << '\n';
    }
    return EXIT_OK;
}

}  // namespace nfarith
