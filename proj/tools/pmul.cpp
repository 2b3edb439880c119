// pmul - square-based arithmetic kernels, verification, and cycle-level
// hardware architecture simulation.
//
// Exit codes: 0 success, 1 verification failure or width violations,
// 2 usage/input errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmul/costmodel.hpp"
#include "pmul/hwsim.hpp"
#include "pmul/kernels_complex.hpp"
#include "pmul/kernels_real.hpp"
#include "pmul/matrix_io.hpp"
#include "pmul/rng.hpp"

using namespace pmul;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::vector<Scalar> as_vector(const Matrix& m, const std::string& what) {
    if (m.rows() != 1 && m.cols() != 1)
        throw FormatError(what + " must be a 1xN or Nx1 matrix file");
    return m.data();
}

std::vector<CScalar> as_cvector(const CMatrix& m, const std::string& what) {
    if (m.rows() != 1 && m.cols() != 1)
        throw FormatError(what + " must be a 1xN or Nx1 matrix file");
    return m.data();
}

Matrix load_real(const std::string& path) {
    MatrixFile f = read_matrix_file(path);
    if (!f.real.has_value()) throw FormatError(path + ": expected a real matrix file");
    return *f.real;
}

CMatrix load_complex(const std::string& path) {
    MatrixFile f = read_matrix_file(path);
    if (!f.cmat.has_value()) throw FormatError(path + ": expected a complex matrix file");
    return *f.cmat;
}

// ---- gen ------------------------------------------------------------------

struct GenOpts {
    std::string shape;
    std::string domain = "int";
    bool complex_vals = false;
    std::uint64_t seed = 1;
    long long range = 127;
    int bits = 0;
    std::string out;
};

std::pair<Index, Index> parse_shape(const std::string& s) {
    auto xpos = s.find('x');
    if (xpos == std::string::npos || xpos == 0 || xpos + 1 >= s.size())
        throw FormatError("shape must look like ROWSxCOLS, got '" + s + "'");
    std::size_t used = 0;
    long rows = 0, cols = 0;
    try {
        rows = std::stol(s.substr(0, xpos), &used);
        if (used != xpos) throw FormatError("bad shape '" + s + "'");
        cols = std::stol(s.substr(xpos + 1), &used);
        if (used != s.size() - xpos - 1) throw FormatError("bad shape '" + s + "'");
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        throw FormatError("bad shape '" + s + "'");
    }
    if (rows <= 0 || cols <= 0) throw FormatError("shape dimensions must be positive");
    return {static_cast<Index>(rows), static_cast<Index>(cols)};
}

int run_gen(const GenOpts& opt) {
    auto [rows, cols] = parse_shape(opt.shape);
    if (opt.domain != "int" && opt.domain != "float")
        throw FormatError("domain must be 'int' or 'float'");
    if (opt.range <= 0) throw FormatError("range must be positive");
    if (opt.bits > 0) {
        const long long lim = (1LL << (opt.bits - 1)) - 1;
        if (opt.range > lim)
            throw FormatError("range " + std::to_string(opt.range) + " does not fit " +
                              std::to_string(opt.bits) + "-bit operands (max " +
                              std::to_string(lim) + ")");
    }
    Domain d = opt.domain == "int" ? Domain::ExactInt : Domain::Float;
    SplitMix64 rng(opt.seed);
    std::string text;
    if (opt.complex_vals)
        text = serialize_matrix(random_cmatrix(rng, rows, cols, d, -opt.range, opt.range));
    else
        text = serialize_matrix(random_matrix(rng, rows, cols, d, -opt.range, opt.range));
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw FormatError("cannot write '" + opt.out + "'");
        f << text;
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
    std::string kernel;
    std::vector<std::string> files;
    std::uint64_t random_cases = 0;
    std::uint64_t seed = 1;
    Index max_dim = 8;
    long long range = 127;
    std::string domain = "int";
    bool json = false;
};

struct CaseResult {
    bool exact;
    double max_abs_diff;
    double tol = 0.0; // >0 only for float-domain comparisons

    bool pass() const { return exact || (tol > 0 && max_abs_diff <= tol); }
};

const std::vector<std::string> kKernels = {
    "matmul_sq",      "transform_sq",   "conv1d_sq", "conv2d_sq", "cmatmul_sq4",
    "cmatmul_sq3",    "ctransform_sq4", "ctransform_sq3", "cconv_sq4", "cconv_sq3",
};

bool kernel_is_complex(const std::string& k) { return k[0] == 'c' && k != "conv1d_sq" && k != "conv2d_sq"; }

double sdiff(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
        return a == b ? 0.0 : std::abs((a - b).approx());
    return std::abs(a.approx() - b.approx());
}

CaseResult compare(const std::vector<Scalar>& got, const std::vector<Scalar>& want) {
    CaseResult r{true, 0.0};
    for (std::size_t i = 0; i < got.size(); ++i) {
        double d = sdiff(got[i], want[i]);
        r.max_abs_diff = std::max(r.max_abs_diff, d);
        if (!(got[i] == want[i])) r.exact = false;
    }
    return r;
}

CaseResult compare(const std::vector<CScalar>& got, const std::vector<CScalar>& want) {
    CaseResult r{true, 0.0};
    for (std::size_t i = 0; i < got.size(); ++i) {
        double d = std::max(sdiff(got[i].re, want[i].re), sdiff(got[i].im, want[i].im));
        r.max_abs_diff = std::max(r.max_abs_diff, d);
        if (!(got[i] == want[i])) r.exact = false;
    }
    return r;
}

double max_abs(const std::vector<Scalar>& v);
double max_abs(const std::vector<CScalar>& v);
double float_tol(Domain d, std::size_t depth, double amax, double bmax);

// One verification case against the MAC oracle; inputs per kernel family.
CaseResult run_kernel_case(const std::string& kernel, SplitMix64& rng, Index max_dim,
                           long long range, Domain d, std::string* rendered) {
    auto dim = [&] { return 1 + rng.next() % max_dim; };
    const double r = static_cast<double>(range);
    auto render_real = [&](const std::vector<Scalar>& v) {
        if (!rendered) return;
        *rendered = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            *rendered += (i ? ", " : "") + v[i].str();
        *rendered += "]";
    };
    auto render_cplx = [&](const std::vector<CScalar>& v) {
        if (!rendered) return;
        *rendered = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            *rendered += (i ? ", " : "") + v[i].str();
        *rendered += "]";
    };
    auto with_tol = [&](CaseResult res, std::size_t depth) {
        res.tol = float_tol(d, depth, r, r);
        return res;
    };

    if (kernel == "matmul_sq") {
        Matrix a = random_matrix(rng, dim(), dim(), d, -range, range);
        Matrix b = random_matrix(rng, a.cols(), dim(), d, -range, range);
        auto got = matmul_sq(a, b);
        render_real(got.value.data());
        return with_tol(compare(got.value.data(), matmul_mac(a, b).value.data()), a.cols());
    }
    if (kernel == "transform_sq") {
        Matrix w = random_matrix(rng, dim(), dim(), d, -range, range);
        std::vector<Scalar> x = random_matrix(rng, 1, w.cols(), d, -range, range).data();
        auto got = transform_sq(w, x);
        render_real(got.value);
        return with_tol(compare(got.value, transform_mac(w, x).value), w.cols());
    }
    if (kernel == "conv1d_sq") {
        Index n = dim();
        std::vector<Scalar> w = random_matrix(rng, 1, n, d, -range, range).data();
        std::vector<Scalar> x = random_matrix(rng, 1, n + dim() + 2, d, -range, range).data();
        auto got = conv1d_sq(w, x);
        render_real(got.value);
        return with_tol(compare(got.value, conv1d_mac(w, x).value), n);
    }
    if (kernel == "conv2d_sq") {
        Index kr = 1 + rng.next() % 3, kc = 1 + rng.next() % 3;
        Matrix w = random_matrix(rng, kr, kc, d, -range, range);
        Matrix x = random_matrix(rng, kr + dim(), kc + dim(), d, -range, range);
        auto got = conv2d_sq(w, x);
        render_real(got.value.data());
        return with_tol(compare(got.value.data(), conv2d_mac(w, x).value.data()), w.size());
    }
    if (kernel == "cmatmul_sq4" || kernel == "cmatmul_sq3") {
        CMatrix a = random_cmatrix(rng, dim(), dim(), d, -range, range);
        CMatrix b = random_cmatrix(rng, a.cols(), dim(), d, -range, range);
        auto got = kernel == "cmatmul_sq4" ? cmatmul_sq4(a, b) : cmatmul_sq3(a, b);
        render_cplx(got.value.data());
        return with_tol(compare(got.value.data(), cmatmul_mac(a, b).value.data()), a.cols());
    }
    if (kernel == "ctransform_sq4" || kernel == "ctransform_sq3") {
        CMatrix w = random_cmatrix(rng, dim(), dim(), d, -range, range);
        CMatrix xm = random_cmatrix(rng, 1, w.cols(), d, -range, range);
        auto got = kernel == "ctransform_sq4" ? ctransform_sq4(w, xm.data())
                                              : ctransform_sq3(w, xm.data());
        render_cplx(got.value);
        return with_tol(compare(got.value, ctransform_mac(w, xm.data()).value), w.cols());
    }
    // cconv_sq4 / cconv_sq3
    Index n = dim();
    CMatrix wm = random_cmatrix(rng, 1, n, d, -range, range);
    CMatrix xm = random_cmatrix(rng, 1, n + dim() + 2, d, -range, range);
    auto got = kernel == "cconv_sq4" ? cconv_sq4(wm.data(), xm.data())
                                     : cconv_sq3(wm.data(), xm.data());
    render_cplx(got.value);
    return with_tol(compare(got.value, cconv_mac(wm.data(), xm.data()).value), n);
}

CaseResult run_file_case(const std::string& kernel, const std::vector<std::string>& files,
                         std::string* rendered);

int run_verify(const VerifyOpts& opt) {
    if (std::find(kKernels.begin(), kKernels.end(), opt.kernel) == kKernels.end())
        throw FormatError("unknown kernel '" + opt.kernel + "'");

    if (opt.domain != "int" && opt.domain != "float")
        throw FormatError("domain must be 'int' or 'float'");
    const Domain dom = opt.domain == "int" ? Domain::ExactInt : Domain::Float;

    std::uint64_t failures = 0;
    std::uint64_t total = 0;
    double worst = 0.0;
    ordered_json cases = ordered_json::array();

    if (opt.random_cases > 0) {
        SplitMix64 rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.random_cases; ++i) {
            CaseResult r = run_kernel_case(opt.kernel, rng, opt.max_dim, opt.range, dom, nullptr);
            ++total;
            worst = std::max(worst, r.max_abs_diff);
            if (opt.json) {
                ordered_json c;
                c["case"] = i;
                c["exact"] = r.exact;
                c["max_abs_diff"] = r.max_abs_diff;
                cases.push_back(std::move(c));
            }
            if (!r.pass()) {
                ++failures;
                if (!opt.json && failures <= 5)
                    std::cout << "case " << i << ": MISMATCH max_abs_diff=" << r.max_abs_diff
                              << "\n";
            }
        }
    } else {
        if (opt.files.size() != 2)
            throw FormatError("verify " + opt.kernel + " needs two matrix files or --random N");
        std::string rendered;
        CaseResult r = run_file_case(opt.kernel, opt.files, &rendered);
        ++total;
        worst = r.max_abs_diff;
        if (!r.pass()) ++failures;
        if (opt.json) {
            ordered_json c;
            c["case"] = 0;
            c["exact"] = r.exact;
            c["max_abs_diff"] = r.max_abs_diff;
            if (r.tol > 0) c["tolerance"] = r.tol;
            cases.push_back(std::move(c));
        } else {
            std::cout << "result: " << rendered << "\n";
            if (r.tol > 0)
                std::cout << "max abs deviation: " << r.max_abs_diff << " (tolerance " << r.tol
                          << ")\n";
        }
    }

    const bool pass = failures == 0;
    if (opt.json) {
        ordered_json j;
        j["kernel"] = opt.kernel;
        j["cases"] = total;
        j["failures"] = failures;
        j["max_abs_diff"] = worst;
        j["pass"] = pass;
        j["per_case"] = std::move(cases);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (pass ? "pass" : "FAIL") << ", " << (total - failures) << "/" << total
                  << (worst == 0.0 ? " exact" : " within tolerance");
        if (worst > 0) std::cout << " (max abs diff " << worst << ")";
        std::cout << "\n";
    }
    return pass ? kExitOk : kExitVerifyFail;
}

double max_abs(const std::vector<Scalar>& v) {
    double m = 0;
    for (const auto& s : v) m = std::max(m, std::abs(s.approx()));
    return m;
}

double max_abs(const std::vector<CScalar>& v) {
    double m = 0;
    for (const auto& s : v) m = std::max({m, std::abs(s.re.approx()), std::abs(s.im.approx())});
    return m;
}

// Float comparisons use 1e-9 relative to the accumulation magnitude.
double float_tol(Domain d, std::size_t depth, double amax, double bmax) {
    if (d == Domain::ExactInt) return 0.0;
    return 1e-9 * (1.0 + static_cast<double>(depth) * 4.0 * amax * bmax);
}

CaseResult run_file_case(const std::string& kernel, const std::vector<std::string>& files,
                         std::string* rendered) {
    auto render_real = [&](const std::vector<Scalar>& v) {
        *rendered = "[";
        for (std::size_t i = 0; i < v.size(); ++i) *rendered += (i ? ", " : "") + v[i].str();
        *rendered += "]";
    };
    auto render_cplx = [&](const std::vector<CScalar>& v) {
        *rendered = "[";
        for (std::size_t i = 0; i < v.size(); ++i) *rendered += (i ? ", " : "") + v[i].str();
        *rendered += "]";
    };

    if (!kernel_is_complex(kernel)) {
        Matrix a = load_real(files[0]);
        Matrix b = load_real(files[1]);
        const std::size_t depth = kernel == "matmul_sq" || kernel == "transform_sq"
                                      ? a.cols()
                                      : a.size();
        const double tol = float_tol(a.domain(), depth, max_abs(a.data()), max_abs(b.data()));
        CaseResult r;
        if (kernel == "matmul_sq") {
            auto got = matmul_sq(a, b);
            render_real(got.value.data());
            r = compare(got.value.data(), matmul_mac(a, b).value.data());
        } else if (kernel == "transform_sq") {
            auto x = as_vector(b, "samples");
            auto got = transform_sq(a, x);
            render_real(got.value);
            r = compare(got.value, transform_mac(a, x).value);
        } else if (kernel == "conv1d_sq") {
            auto w = as_vector(a, "kernel");
            auto x = as_vector(b, "signal");
            auto got = conv1d_sq(w, x);
            render_real(got.value);
            r = compare(got.value, conv1d_mac(w, x).value);
        } else {
            auto got = conv2d_sq(a, b);
            render_real(got.value.data());
            r = compare(got.value.data(), conv2d_mac(a, b).value.data());
        }
        r.tol = tol;
        return r;
    }

    CMatrix a = load_complex(files[0]);
    CMatrix b = load_complex(files[1]);
    const std::size_t depth = kernel == "cmatmul_sq4" || kernel == "cmatmul_sq3" ||
                                      kernel == "ctransform_sq4" || kernel == "ctransform_sq3"
                                  ? a.cols()
                                  : a.size();
    const double tol = float_tol(a.domain(), depth, max_abs(a.data()), max_abs(b.data()));
    CaseResult r;
    if (kernel == "cmatmul_sq4" || kernel == "cmatmul_sq3") {
        auto got = kernel == "cmatmul_sq4" ? cmatmul_sq4(a, b) : cmatmul_sq3(a, b);
        render_cplx(got.value.data());
        r = compare(got.value.data(), cmatmul_mac(a, b).value.data());
    } else if (kernel == "ctransform_sq4" || kernel == "ctransform_sq3") {
        auto x = as_cvector(b, "samples");
        auto got = kernel == "ctransform_sq4" ? ctransform_sq4(a, x) : ctransform_sq3(a, x);
        render_cplx(got.value);
        r = compare(got.value, ctransform_mac(a, x).value);
    } else {
        auto w = as_cvector(a, "kernel");
        auto x = as_cvector(b, "signal");
        auto got = kernel == "cconv_sq4" ? cconv_sq4(w, x) : cconv_sq3(w, x);
        render_cplx(got.value);
        r = compare(got.value, cconv_mac(w, x).value);
    }
    r.tol = tol;
    return r;
}

// ---- ratio -----------------------------------------------------------------

int run_ratio(const std::string& family, unsigned m, unsigned n, unsigned p, bool json) {
    Rational r;
    if (family == "real")
        r = ratio_real(m, n, p);
    else if (family == "complex4")
        r = ratio_complex4(m, n, p);
    else if (family == "complex3")
        r = ratio_complex3(m, n, p);
    else
        throw FormatError("family must be one of: real, complex4, complex3");
    const double approx = r.convert_to<double>();
    const std::string frac =
        boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    if (json) {
        ordered_json j;
        j["family"] = family;
        j["m"] = m;
        j["n"] = n;
        j["p"] = p;
        j["ratio"] = approx;
        j["exact"] = frac;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << Scalar::real(approx).str() << " (" << frac << ")\n";
    }
    return kExitOk;
}

// ---- area ------------------------------------------------------------------

struct AreaOpts {
    std::string arch, variant;
    int bits = 8;
    Index rows = 1, cols = 1, depth = 16;
    AreaModel model;
    bool json = false;
};

int run_area(const AreaOpts& opt) {
    AreaReport r = area_estimate(parse_arch(opt.arch), parse_variant(opt.variant), opt.bits,
                                 AreaDims{opt.rows, opt.cols, opt.depth}, opt.model);
    if (opt.json) {
        ordered_json j;
        j["label"] = "model estimate";
        for (const auto& [k, v] : r.rows()) j[k] = v;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.to_text();
    }
    return kExitOk;
}

// ---- simulate --------------------------------------------------------------

struct SimOpts {
    std::string arch, variant;
    std::vector<std::string> files;
    std::string trace_path;
    std::string trace_level = "registers";
    int bits = 8;
    Index depth = 0; // 0: derive from inputs
    Index tiles = 1;
    bool json = false;
};

void write_trace(const SimTrace& trace, const std::string& path) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot write '" + path + "'");
    trace.write_csv(f);
}

int report_sim(const SimTrace& trace, const SimConfig& cfg, const SimOpts& opt) {
    write_trace(trace, opt.trace_path);
    const bool sq = variant_is_square_based(cfg.variant);
    if (opt.json) {
        ordered_json j;
        j["arch"] = arch_name(cfg.arch);
        j["variant"] = variant_name(cfg.variant);
        j["cycles"] = trace.cycles_total;
        ordered_json fs = ordered_json::object();
        for (const auto& [k, v] : trace.final_state) fs[k] = v;
        j["final_state"] = std::move(fs);
        j["doubled_output"] = sq;
        j["width_violations"] = trace.width_violations.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "arch: " << arch_name(cfg.arch) << "  variant: " << variant_name(cfg.variant)
                  << "  cycles: " << trace.cycles_total << "\n";
        for (const auto& [k, v] : trace.final_state) std::cout << k << " = " << v << "\n";
        if (sq)
            std::cout << "note: square-based outputs are doubled; divide by 2 (right shift) for "
                         "the true result\n";
        if (!trace.ok()) {
            std::cout << "width violations: " << trace.width_violations.size() << "\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(5, trace.width_violations.size());
                 ++i) {
                const auto& v = trace.width_violations[i];
                std::cout << "  cycle " << v.cycle << " " << v.unit << "." << v.signal << " = "
                          << v.value << " exceeds " << v.bits << " bits\n";
            }
        }
    }
    return trace.ok() ? kExitOk : kExitVerifyFail;
}

int run_simulate(const SimOpts& opt) {
    SimConfig cfg;
    cfg.arch = parse_arch(opt.arch);
    cfg.variant = parse_variant(opt.variant);
    cfg.trace_level = parse_trace_level(opt.trace_level);
    cfg.validate();
    if (opt.files.size() != 2) throw FormatError("simulate needs two input files");

    MatrixFile fa = read_matrix_file(opt.files[0]);
    MatrixFile fb = read_matrix_file(opt.files[1]);
    if (fa.is_complex() != fb.is_complex())
        throw FormatError("both inputs must be real or both complex");
    const bool complex_in = fa.is_complex();

    auto plan_for = [&](Index depth) {
        return BitWidthPlan{opt.bits, static_cast<int>(std::max<Index>(
                                          1, opt.depth != 0 ? opt.depth : depth))};
    };

    switch (cfg.arch) {
        case Arch::PMAcc: {
            if (complex_in) {
                auto x = as_cvector(*fa.cmat, "sequence");
                auto y = as_cvector(*fb.cmat, "sequence");
                cfg.bitplan = plan_for(x.size());
                CScalar init = CScalar::zero(x.empty() ? Domain::ExactInt : x[0].domain());
                if (cfg.variant == Variant::CPM) {
                    CMatrix xm(1, x.size(), x), ym(y.size(), 1, y);
                    Scalar s = complex4_corrections(xm, Side::Rows).term("Sx")[0] +
                               complex4_corrections(ym, Side::Cols).term("Sy")[0];
                    init = CScalar(s, s);
                } else if (cfg.variant == Variant::CPM3) {
                    CMatrix xm(1, x.size(), x), ym(y.size(), 1, y);
                    CorrectionSet rows = complex3_corrections(xm, Side::Rows);
                    CorrectionSet cols = complex3_corrections(ym, Side::Cols);
                    init = CScalar(rows.term("Sab")[0] + cols.term("Scs")[0],
                                   rows.term("Sba")[0] + cols.term("Ssc")[0]);
                }
                auto res = pm_accumulator_run(x, y, init, cfg);
                return report_sim(res.trace, cfg, opt);
            }
            auto a = as_vector(*fa.real, "sequence");
            auto b = as_vector(*fb.real, "sequence");
            cfg.bitplan = plan_for(a.size());
            Scalar init = Scalar::zero(a.empty() ? Domain::ExactInt : a[0].domain());
            if (cfg.variant == Variant::SQ) {
                Matrix am(1, a.size(), a), bm(b.size(), 1, b);
                CorrectionSet corr = real_mat_corrections(am, bm);
                init = corr.term("Sa")[0] + corr.term("Sb")[0];
            }
            auto res = pm_accumulator_run(a, b, init, cfg);
            return report_sim(res.trace, cfg, opt);
        }
        case Arch::Systolic: {
            if (complex_in) throw FormatError("the systolic array is defined for real values");
            cfg.bitplan = plan_for(fa.real->cols());
            auto res = systolic_run(*fa.real, *fb.real, cfg);
            return report_sim(res.trace, cfg, opt);
        }
        case Arch::TensorCore: {
            if (complex_in) throw FormatError("the tensor core is defined for real values");
            const Matrix& a = *fa.real;
            const Matrix& b = *fb.real;
            if (opt.tiles == 0 || a.cols() % opt.tiles != 0)
                throw FormatError("--tiles must divide the reduction dimension");
            const Index tw = a.cols() / opt.tiles;
            std::vector<Matrix> a_tiles, b_tiles;
            for (Index t = 0; t < opt.tiles; ++t) {
                Matrix ta(a.rows(), tw, a.domain());
                Matrix tb(tw, b.cols(), b.domain());
                for (Index i = 0; i < a.rows(); ++i)
                    for (Index k = 0; k < tw; ++k) ta.at(i, k) = a.at(i, t * tw + k);
                for (Index k = 0; k < tw; ++k)
                    for (Index j = 0; j < b.cols(); ++j) tb.at(k, j) = b.at(t * tw + k, j);
                a_tiles.push_back(std::move(ta));
                b_tiles.push_back(std::move(tb));
            }
            cfg.bitplan = plan_for(a.cols());
            CorrectionSet corr = real_mat_corrections(a, b); // full rows/columns
            auto res = tensorcore_run(a_tiles, b_tiles,
                                      cfg.variant == Variant::SQ ? &corr : nullptr, cfg);
            return report_sim(res.trace, cfg, opt);
        }
        case Arch::TransformEngine: {
            if (complex_in) {
                const CMatrix& w = *fa.cmat;
                auto x = as_cvector(*fb.cmat, "samples");
                cfg.bitplan = plan_for(w.cols());
                CorrectionSet s;
                const CorrectionSet* sp = nullptr;
                if (cfg.variant == Variant::CPM) {
                    s = ctransform4_corrections(w);
                    sp = &s;
                } else if (cfg.variant == Variant::CPM3) {
                    s = ctransform3_corrections(w);
                    sp = &s;
                }
                auto res = transform_engine_run(w, x, sp, cfg);
                return report_sim(res.trace, cfg, opt);
            }
            const Matrix& w = *fa.real;
            auto x = as_vector(*fb.real, "samples");
            cfg.bitplan = plan_for(w.cols());
            CorrectionSet s;
            const CorrectionSet* sp = nullptr;
            if (cfg.variant == Variant::SQ) {
                s = transform_corrections(w);
                sp = &s;
            }
            auto res = transform_engine_run(w, x, sp, cfg);
            return report_sim(res.trace, cfg, opt);
        }
        case Arch::ConvEngine: {
            if (complex_in) {
                auto w = as_cvector(*fa.cmat, "kernel");
                auto x = as_cvector(*fb.cmat, "signal");
                cfg.bitplan = plan_for(w.size());
                CorrectionSet s;
                const CorrectionSet* sp = nullptr;
                if (cfg.variant == Variant::CPM) {
                    s = cconv4_corrections(w);
                    sp = &s;
                } else if (cfg.variant == Variant::CPM3) {
                    s = cconv3_corrections(w);
                    sp = &s;
                }
                auto res = conv_engine_run(w, x, sp, cfg);
                return report_sim(res.trace, cfg, opt);
            }
            auto w = as_vector(*fa.real, "kernel");
            auto x = as_vector(*fb.real, "signal");
            cfg.bitplan = plan_for(w.size());
            CorrectionSet s;
            const CorrectionSet* sp = nullptr;
            if (cfg.variant == Variant::SQ) {
                s = conv_corrections(w);
                sp = &s;
            }
            auto res = conv_engine_run(w, x, sp, cfg);
            return report_sim(res.trace, cfg, opt);
        }
    }
    throw Error("unreachable");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-based arithmetic kernels and hardware architecture simulators"};
    app.require_subcommand(1);
    int rc = kExitOk;

    GenOpts gen;
    auto* cgen = app.add_subcommand("gen", "generate a deterministic seeded matrix file");
    cgen->add_option("shape", gen.shape, "ROWSxCOLS")->required();
    cgen->add_option("--domain", gen.domain, "int|float")->capture_default_str();
    cgen->add_flag("--complex", gen.complex_vals, "complex entries");
    cgen->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    cgen->add_option("--range", gen.range, "values drawn from [-range, range]")
        ->capture_default_str();
    cgen->add_option("--bits", gen.bits, "check the range fits this signed width");
    cgen->add_option("-o,--out", gen.out, "output path (default stdout)");
    cgen->callback([&] { rc = run_gen(gen); });

    VerifyOpts ver;
    auto* cver = app.add_subcommand("verify", "check a square-based kernel against its oracle");
    cver->add_option("kernel", ver.kernel, "kernel name")->required();
    cver->add_option("files", ver.files, "operand matrix files");
    cver->add_option("--random", ver.random_cases, "run N random cases instead of files");
    cver->add_option("--domain", ver.domain, "int|float for random cases")->capture_default_str();
    cver->add_option("--seed", ver.seed, "RNG seed")->capture_default_str();
    cver->add_option("--max-dim", ver.max_dim, "random case dimension cap")->capture_default_str();
    cver->add_option("--range", ver.range, "random value range")->capture_default_str();
    cver->add_flag("--json", ver.json, "machine-readable report");
    cver->callback([&] { rc = run_verify(ver); });

    std::string rat_family;
    unsigned rat_m = 1, rat_n = 1, rat_p = 1;
    bool rat_json = false;
    auto* crat = app.add_subcommand("ratio", "squarings-per-multiplication closed forms");
    crat->add_option("family", rat_family, "real|complex4|complex3")->required();
    crat->add_option("M", rat_m)->required();
    crat->add_option("N", rat_n)->required();
    crat->add_option("P", rat_p)->required();
    crat->add_flag("--json", rat_json);
    crat->callback([&] { rc = run_ratio(rat_family, rat_m, rat_n, rat_p, rat_json); });

    AreaOpts area;
    auto* carea = app.add_subcommand("area", "gate-area model estimate");
    carea->add_option("arch", area.arch, "pmacc|systolic|tensorcore|transform|conv")->required();
    carea->add_option("variant", area.variant, "MAC|MAC-direct|MAC-transposed|SQ|CPM|CPM3")
        ->required();
    carea->add_option("--bits", area.bits, "operand width n")->capture_default_str();
    carea->add_option("--rows", area.rows, "PE grid rows / tap count")->capture_default_str();
    carea->add_option("--cols", area.cols, "PE grid cols")->capture_default_str();
    carea->add_option("--depth", area.depth, "reduction depth")->capture_default_str();
    carea->add_option("--mult-coeff", area.model.mult_coeff)->capture_default_str();
    carea->add_option("--squarer-factor", area.model.squarer_factor)->capture_default_str();
    carea->add_option("--adder-coeff", area.model.adder_coeff)->capture_default_str();
    carea->add_flag("--json", area.json);
    carea->callback([&] { rc = run_area(area); });

    SimOpts sim;
    auto* csim = app.add_subcommand("simulate", "cycle-level architecture simulation");
    csim->add_option("arch", sim.arch, "pmacc|systolic|tensorcore|transform|conv")->required();
    csim->add_option("variant", sim.variant, "MAC|MAC-direct|MAC-transposed|SQ|CPM|CPM3")
        ->required();
    csim->add_option("files", sim.files, "operand matrix files")->expected(2);
    csim->add_option("--trace", sim.trace_path, "write the trace CSV here");
    csim->add_option("--trace-level", sim.trace_level, "final|registers|full")
        ->capture_default_str();
    csim->add_option("--bits", sim.bits, "planned operand width")->capture_default_str();
    csim->add_option("--depth", sim.depth, "planned reduction depth (default: derived)");
    csim->add_option("--tiles", sim.tiles, "tensor core: tile count along the reduction dim")
        ->capture_default_str();
    csim->add_flag("--json", sim.json);
    csim->callback([&] { rc = run_simulate(sim); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
