// Command-line surface for the sparse linear covariance model estimator.
// Subcommands: estimate, tune, simulate, qda, cluster, bootstrap-v. Every
// run writes a manifest.json echoing the effective configuration; rerunning
// the recorded argv reproduces all output files bitwise.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

#include "splcm/clime.hpp"
#include "splcm/densela.hpp"
#include "splcm/downstream.hpp"
#include "splcm/estimator.hpp"
#include "splcm/io.hpp"
#include "splcm/rng.hpp"
#include "splcm/simbench.hpp"
#include "splcm/tuning.hpp"
#include "splcm/wishart.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace splcm;

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::string> g_argv;

void write_manifest(const std::string& out_dir, const std::string& subcommand, json config) {
    json m;
    m["schema_version"] = kSchemaVersion;
    m["subcommand"] = subcommand;
    m["argv"] = g_argv;
    m["config"] = std::move(config);
    std::ofstream f(out_dir + "/manifest.json");
    f << m.dump(2) << "\n";
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path);
    f << j.dump(2) << "\n";
}

SymMatrix sample_cov_from_data(const Matrix& y, bool center) {
    const int n = y.rows, p = y.cols;
    std::vector<double> mean(p, 0.0);
    if (center) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p; ++j) mean[j] += y(i, j);
        for (double& m : mean) m /= n;
    }
    SymMatrix s(p);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k <= j; ++k) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += (y(i, j) - mean[j]) * (y(i, k) - mean[k]);
            s.set(j, k, acc / n);
        }
    return s;
}

SymMatrix symmetric_from_csv(const std::string& path) {
    Matrix m = read_csv_matrix(path);
    if (m.rows != m.cols) throw ParseError(path + ": expected a square matrix");
    return SymMatrix::from_lower(m);
}

json fit_report(const SplcmFit& f, double lambda, double rho, double bic) {
    json r;
    r["schema_version"] = kSchemaVersion;
    r["lambda"] = lambda;
    r["rho"] = rho;
    r["iterations"] = f.iterations;
    r["converged"] = f.converged;
    r["primal_residual"] = f.primal_residual;
    r["dual_residual"] = f.dual_residual;
    r["min_eigenvalue"] = f.min_eigenvalue;
    r["delta"] = f.delta_used;
    r["support_size"] = f.active_set.size();
    r["bic"] = bic;
    return r;
}

struct InputMatrix {
    SymMatrix s;
    int n = 0;
    std::optional<Matrix> raw;
};

InputMatrix load_input(const std::string& data_path, const std::string& cov_path, int n_flag,
                       bool center) {
    InputMatrix in;
    if (!data_path.empty()) {
        Matrix y = read_csv_matrix(data_path);
        in.n = y.rows;
        in.s = sample_cov_from_data(y, center);
        in.raw = std::move(y);
    } else {
        if (n_flag <= 0)
            throw CLI::ValidationError("--n is required when a covariance file is supplied");
        in.s = symmetric_from_csv(cov_path);
        in.n = n_flag;
    }
    return in;
}

// Precision plug-in selection shared by estimate/tune.
ErrorPrecision make_precision(const SymMatrix& s, int n, double rho, double tau,
                              bool identity, const std::string& oracle_cov_path) {
    if (identity) return build_error_precision(SymMatrix::identity(s.dim()), n);
    if (!oracle_cov_path.empty()) {
        SymMatrix sigma_star = symmetric_from_csv(oracle_cov_path);
        return build_error_precision(sym_inverse(sigma_star), n);
    }
    SymMatrix omega = clime_threshold(clime_solve(s, rho), tau);
    return build_error_precision(omega, n);
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

// ---------------------------------------------------------------- estimate

int cmd_estimate(const std::string& data_path, const std::string& cov_path, int n_flag,
                 bool center, double lambda, double rho, double tau_flag, double gamma,
                 double delta, int max_iter, bool identity, const std::string& oracle_path,
                 bool matrix_free, const std::string& out_dir) {
    InputMatrix in = load_input(data_path, cov_path, n_flag, center);
    double tau = tau_flag >= 0.0 ? tau_flag : rho;
    ErrorPrecision ep = make_precision(in.s, in.n, rho, tau, identity, oracle_path);

    SplcmConfig cfg;
    cfg.lambda = lambda;
    cfg.gamma = gamma;
    cfg.delta = delta;
    cfg.max_iter = max_iter;
    cfg.solver = matrix_free ? SolverPath::MatrixFreeCg : SolverPath::DenseCholesky;

    SplcmFit f = fit(in.s, ep, cfg);
    write_csv_matrix(out_dir + "/sigma_hat.csv", f.sigma_hat);
    double bic = bic_score(in.s, f, in.n);
    write_json(out_dir + "/report.json", fit_report(f, lambda, rho, bic));
    write_manifest(out_dir, "estimate",
                   json{{"lambda", lambda}, {"rho", rho}, {"tau", tau}, {"gamma", gamma},
                        {"delta", delta}, {"n", in.n}, {"p", in.s.dim()},
                        {"identity_precision", identity}, {"center", center}});
    return f.converged ? 0 : 1;
}

// -------------------------------------------------------------------- tune

int cmd_tune(const std::string& data_path, const std::string& cov_path, int n_flag, bool center,
             const std::string& lambdas_csv, const std::string& rhos_csv, int lambda_points,
             double gamma, double delta, int max_iter, bool identity,
             const std::string& oracle_path, const std::string& out_dir) {
    InputMatrix in = load_input(data_path, cov_path, n_flag, center);

    SplcmConfig cfg;
    cfg.gamma = gamma;
    cfg.delta = delta;
    cfg.max_iter = max_iter;

    std::vector<double> rhos =
        rhos_csv.empty() ? default_rho_grid() : parse_grid(rhos_csv);
    if (rhos.empty()) throw CLI::ValidationError("--rhos parsed to an empty grid");

    TuneResult result;
    if (identity || !oracle_path.empty()) {
        ErrorPrecision ep = make_precision(in.s, in.n, 0.0, 0.0, identity, oracle_path);
        std::vector<double> lambdas = lambdas_csv.empty()
                                          ? default_lambda_grid(in.s, ep, lambda_points)
                                          : parse_grid(lambdas_csv);
        if (lambdas.empty()) throw CLI::ValidationError("--lambdas parsed to an empty grid");
        result = grid_search_fixed_precision(in.s, in.n, ep, lambdas, cfg);
    } else {
        std::vector<double> lambdas;
        if (lambdas_csv.empty()) {
            ErrorPrecision ep0 = make_precision(in.s, in.n, rhos.front(), rhos.front(), false, "");
            lambdas = default_lambda_grid(in.s, ep0, lambda_points);
        } else {
            lambdas = parse_grid(lambdas_csv);
        }
        if (lambdas.empty()) throw CLI::ValidationError("--lambdas parsed to an empty grid");
        result = grid_search(in.s, in.n, lambdas, rhos, cfg);
    }

    // tuning table
    {
        std::ofstream t(out_dir + "/tuning.csv");
        t << "lambda,rho,bic,support,converged\n";
        for (const auto& c : result.table)
            t << format_double(c.lambda) << "," << format_double(c.rho) << ","
              << format_double(c.bic) << "," << c.support << "," << (c.converged ? 1 : 0)
              << "\n";
    }
    write_csv_matrix(out_dir + "/sigma_hat.csv", result.best_fit.sigma_hat);
    json rep = fit_report(result.best_fit, result.best_lambda, result.best_rho,
                          result.best_fit_bic);
    write_json(out_dir + "/report.json", rep);
    write_manifest(out_dir, "tune",
                   json{{"n", in.n}, {"p", in.s.dim()}, {"best_lambda", result.best_lambda},
                        {"best_rho", result.best_rho}, {"identity_precision", identity}});
    return 0;
}

// ---------------------------------------------------------------- simulate

struct MethodRow {
    std::string method;
    int rep;
    MetricReport metrics;
    double lambda, rho, bic;
};

int cmd_simulate(const std::string& model_name, int p, int n, int reps, std::uint64_t seed,
                 const std::string& methods_csv, double gamma, int max_iter, bool emit_roc,
                 const std::string& out_dir) {
    CovModelSpec spec;
    if (model_name == "ma1") {
        spec.kind = CovModel::MA1;
        spec.value = 0.4;
    } else if (model_name == "random") {
        spec.kind = CovModel::Random;
        spec.value = 1.0;
    } else if (model_name == "hub") {
        spec.kind = CovModel::Hub;
        spec.value = 1.0;
    } else {
        throw CLI::ValidationError("unknown model: " + model_name);
    }
    spec.p = p;
    spec.seed = seed;

    std::vector<std::string> methods;
    {
        std::stringstream ss(methods_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) methods.push_back(tok);
    }

    SymMatrix sigma_star = gen_cov(spec);
    ErrorPrecision oracle_ep = build_error_precision(sym_inverse(sigma_star), n);

    SplcmConfig cfg;
    cfg.gamma = gamma;
    cfg.max_iter = max_iter;

    std::vector<MethodRow> rows;
    for (int rep = 0; rep < reps; ++rep) {
        std::uint64_t rep_seed = seed ^ (0x9E3779B97F4A7C15ULL * (rep + 1));
        GaussianSample gs = sample_gaussian(sigma_star, n, rep_seed);

        for (const auto& method : methods) {
            TuneResult tr;
            if (method == "splcm") {
                auto rhos = default_rho_grid();
                ErrorPrecision ep0 = make_precision(gs.s, n, rhos.front(), rhos.front(),
                                                    false, "");
                auto lambdas = default_lambda_grid(gs.s, ep0);
                tr = grid_search(gs.s, n, lambdas, rhos, cfg);
            } else if (method == "splcm-oracle") {
                auto lambdas = default_lambda_grid(gs.s, oracle_ep);
                tr = grid_search_fixed_precision(gs.s, n, oracle_ep, lambdas, cfg);
            } else if (method == "soft") {
                ErrorPrecision ep = build_error_precision(SymMatrix::identity(p), n);
                auto lambdas = default_lambda_grid(gs.s, ep);
                tr = grid_search_fixed_precision(gs.s, n, ep, lambdas, cfg);
            } else {
                throw CLI::ValidationError("unknown method: " + method);
            }
            MetricReport m = evaluate(tr.best_fit.sigma_hat, sigma_star,
                                      &tr.best_fit.active_set);
            rows.push_back({method, rep, m, tr.best_lambda, tr.best_rho, tr.best_fit_bic});

            if (emit_roc) {
                ErrorPrecision ep_roc = method == "splcm-oracle"
                                            ? oracle_ep
                                            : make_precision(gs.s, n, tr.best_rho,
                                                             tr.best_rho,
                                                             method == "soft", "");
                auto lambdas = default_lambda_grid(gs.s, ep_roc);
                auto pts = roc_curve(gs.s, ep_roc, lambdas, cfg, sigma_star);
                std::ofstream rf(out_dir + "/roc_" + method + "_rep" + std::to_string(rep) +
                                 ".csv");
                rf << "lambda,fpr,tpr\n";
                for (const auto& pt : pts)
                    rf << format_double(pt.lambda) << "," << format_double(pt.fpr) << ","
                       << format_double(pt.tpr) << "\n";
            }
        }
    }

    {
        std::ofstream mf(out_dir + "/metrics.csv");
        mf << "rep,method,offdiag_l2,frobenius,opnorm,tpr,fpr,support,lambda,rho,bic\n";
        for (const auto& r : rows)
            mf << r.rep << "," << r.method << "," << format_double(r.metrics.offdiag_l2) << ","
               << format_double(r.metrics.frobenius) << "," << format_double(r.metrics.opnorm)
               << "," << format_double(r.metrics.tpr) << "," << format_double(r.metrics.fpr)
               << "," << r.metrics.est_support << "," << format_double(r.lambda) << ","
               << format_double(r.rho) << "," << format_double(r.bic) << "\n";
    }

    json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["model"] = model_name;
    summary["p"] = p;
    summary["n"] = n;
    summary["reps"] = reps;
    summary["seed"] = seed;
    for (const auto& method : methods) {
        double fro = 0.0, off = 0.0, op = 0.0, tpr = 0.0, fpr = 0.0;
        int count = 0;
        for (const auto& r : rows) {
            if (r.method != method) continue;
            fro += r.metrics.frobenius;
            off += r.metrics.offdiag_l2;
            op += r.metrics.opnorm;
            tpr += r.metrics.tpr;
            fpr += r.metrics.fpr;
            ++count;
        }
        summary["mean"][method] = {{"frobenius", fro / count},
                                   {"offdiag_l2", off / count},
                                   {"opnorm", op / count},
                                   {"tpr", tpr / count},
                                   {"fpr", fpr / count}};
    }
    write_json(out_dir + "/summary.json", summary);
    write_manifest(out_dir, "simulate",
                   json{{"model", model_name}, {"p", p}, {"n", n}, {"reps", reps},
                        {"seed", seed}, {"methods", methods}});
    return 0;
}

// --------------------------------------------------------------------- qda

CovEstimator make_cov_estimator(const std::string& method, double rho, double gamma,
                                int max_iter) {
    if (method == "sample") {
        return [](const SymMatrix& s, int) { return pd_project(s, 0.0); };
    }
    if (method == "soft") {
        return [gamma, max_iter](const SymMatrix& s, int n) {
            ErrorPrecision ep = build_error_precision(SymMatrix::identity(s.dim()), n);
            SplcmConfig cfg;
            cfg.gamma = gamma;
            cfg.max_iter = max_iter;
            auto lambdas = default_lambda_grid(s, ep, 10);
            return grid_search_fixed_precision(s, n, ep, lambdas, cfg).best_fit.sigma_hat;
        };
    }
    if (method == "splcm") {
        return [rho, gamma, max_iter](const SymMatrix& s, int n) {
            SymMatrix omega = clime_threshold(clime_solve(s, rho), rho);
            ErrorPrecision ep = build_error_precision(omega, n);
            SplcmConfig cfg;
            cfg.gamma = gamma;
            cfg.max_iter = max_iter;
            auto lambdas = default_lambda_grid(s, ep, 10);
            return grid_search_fixed_precision(s, n, ep, lambdas, cfg).best_fit.sigma_hat;
        };
    }
    throw CLI::ValidationError("unknown covariance method: " + method);
}

int cmd_qda(const std::string& data_path, int splits, double train_frac, std::uint64_t seed,
            const std::string& method, double rho, double gamma, int max_iter,
            const std::string& out_dir) {
    LabeledData data = read_labeled_csv(data_path);
    std::vector<int> classes = data.labels;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    CovEstimator est = make_cov_estimator(method, rho, gamma, max_iter);

    std::ofstream pf(out_dir + "/predictions.csv");
    pf << "split,row,truth,predicted\n";
    double err_sum = 0.0;
    for (int split = 0; split < splits; ++split) {
        // stratified split: shuffle each class's indices, take train_frac
        std::vector<int> train_rows, test_rows;
        CounterRng rng(seed ^ (0x9E3779B97F4A7C15ULL * (split + 1)));
        for (int cls : classes) {
            std::vector<int> idx;
            for (std::size_t i = 0; i < data.labels.size(); ++i)
                if (data.labels[i] == cls) idx.push_back(static_cast<int>(i));
            for (std::size_t i = idx.size(); i > 1; --i)
                std::swap(idx[i - 1], idx[rng.next_u64() % i]);
            std::size_t ntrain = static_cast<std::size_t>(train_frac * idx.size());
            ntrain = std::max<std::size_t>(2, std::min(ntrain, idx.size() - 1));
            for (std::size_t i = 0; i < idx.size(); ++i)
                (i < ntrain ? train_rows : test_rows).push_back(idx[i]);
        }

        std::vector<Matrix> class_data;
        for (int cls : classes) {
            std::vector<int> rows;
            for (int r : train_rows)
                if (data.labels[r] == cls) rows.push_back(r);
            Matrix d(static_cast<int>(rows.size()), data.x.cols);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (int j = 0; j < data.x.cols; ++j)
                    d(static_cast<int>(i), j) = data.x(rows[i], j);
            class_data.push_back(std::move(d));
        }
        QdaModel model = qda_fit(class_data, est);

        int wrong = 0;
        std::vector<double> y(data.x.cols);
        for (int r : test_rows) {
            for (int j = 0; j < data.x.cols; ++j) y[j] = data.x(r, j);
            int pred = qda_classify(model, y);
            int truth_idx = static_cast<int>(
                std::find(classes.begin(), classes.end(), data.labels[r]) - classes.begin());
            pf << split << "," << r << "," << classes[truth_idx] << "," << classes[pred]
               << "\n";
            if (pred != truth_idx) ++wrong;
        }
        err_sum += test_rows.empty() ? 0.0 : static_cast<double>(wrong) / test_rows.size();
    }

    json rep;
    rep["schema_version"] = kSchemaVersion;
    rep["method"] = method;
    rep["splits"] = splits;
    rep["mean_misclassification"] = err_sum / splits;
    write_json(out_dir + "/report.json", rep);
    write_manifest(out_dir, "qda",
                   json{{"splits", splits}, {"train_frac", train_frac}, {"seed", seed},
                        {"method", method}, {"rho", rho}});
    return 0;
}

// ----------------------------------------------------------------- cluster

int cmd_cluster(const std::string& data_path, const std::string& corr_path,
                const std::string& linkage_name, const std::string& method, double rho,
                double gamma, int max_iter, const std::string& out_dir) {
    SymMatrix r(0);
    if (!corr_path.empty()) {
        r = symmetric_from_csv(corr_path);
    } else {
        Matrix y = read_csv_matrix(data_path);
        SymMatrix s = sample_cov_from_data(y, true);
        CovEstimator est = make_cov_estimator(method, rho, gamma, max_iter);
        r = corr_from_cov(est(s, y.rows));
    }
    Linkage linkage;
    if (linkage_name == "average")
        linkage = Linkage::Average;
    else if (linkage_name == "complete")
        linkage = Linkage::Complete;
    else
        throw CLI::ValidationError("unknown linkage: " + linkage_name);

    Dendrogram d = hier_cluster(r, linkage);
    std::ofstream f(out_dir + "/dendrogram.csv");
    f << "step,a,b,height\n";
    for (std::size_t i = 0; i < d.merges.size(); ++i)
        f << i << "," << d.merges[i].a << "," << d.merges[i].b << ","
          << format_double(d.merges[i].height) << "\n";
    write_manifest(out_dir, "cluster",
                   json{{"linkage", linkage_name}, {"method", method}, {"rho", rho}});
    return 0;
}

// ------------------------------------------------------------- bootstrap-v

int cmd_bootstrap_v(const std::string& data_path, int resamples, std::uint64_t seed,
                    const std::string& out_dir) {
    Matrix y = read_csv_matrix(data_path);
    Matrix v = bootstrap_error_cov(y, resamples, seed);
    write_csv_matrix(out_dir + "/vboot.csv", v);
    write_manifest(out_dir, "bootstrap-v",
                   json{{"resamples", resamples}, {"seed", seed}, {"n", y.rows},
                        {"p", y.cols}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) g_argv.emplace_back(argv[i]);

    CLI::App app{"sparse linear covariance model estimator"};
    app.require_subcommand(1);

    std::string data_path, cov_path, oracle_path, out_dir = ".";
    std::string lambdas_csv, rhos_csv, model_name = "ma1", methods_csv = "splcm";
    std::string linkage_name = "average", method = "splcm", corr_path;
    int n_flag = 0, max_iter = 1000, lambda_points = 20, p = 50, n = 100, reps = 20;
    int splits = 100, resamples = 100;
    double lambda = 0.1, rho = 0.2, tau_flag = -1.0, gamma = 1.0, delta = 0.0;
    double train_frac = 0.5;
    std::uint64_t seed = 1;
    bool center = false, identity = false, matrix_free = false, emit_roc = false;

    auto* est = app.add_subcommand("estimate", "fit the estimator at fixed (lambda, rho)");
    est->add_option("--data", data_path, "raw data CSV (rows = samples)");
    est->add_option("--cov", cov_path, "sample covariance CSV");
    est->add_option("--n", n_flag, "sample size (required with --cov)");
    est->add_flag("--center", center, "mean-center raw data before forming S");
    est->add_option("--lambda", lambda, "l1 penalty");
    est->add_option("--rho", rho, "CLIME constraint level");
    est->add_option("--tau", tau_flag, "CLIME hard threshold (default: rho)");
    est->add_option("--gamma", gamma, "ADMM step");
    est->add_option("--delta", delta, "PD floor (default 1e-4 * mean variance)");
    est->add_option("--max-iter", max_iter, "ADMM iteration cap");
    est->add_flag("--identity-precision", identity, "soft-thresholding mode");
    est->add_option("--oracle-precision", oracle_path, "true covariance CSV for oracle V^-1");
    est->add_flag("--matrix-free", matrix_free, "CG sigma updates instead of dense Cholesky");
    est->add_option("--out-dir", out_dir, "output directory");

    auto* tune = app.add_subcommand("tune", "BIC grid search over (lambda, rho)");
    tune->add_option("--data", data_path, "raw data CSV");
    tune->add_option("--cov", cov_path, "sample covariance CSV");
    tune->add_option("--n", n_flag, "sample size (required with --cov)");
    tune->add_flag("--center", center, "mean-center raw data");
    tune->add_option("--lambdas", lambdas_csv, "comma-separated lambda grid (descending)");
    tune->add_option("--rhos", rhos_csv, "comma-separated rho grid");
    tune->add_option("--lambda-points", lambda_points, "size of the default lambda grid");
    tune->add_option("--gamma", gamma, "ADMM step");
    tune->add_option("--delta", delta, "PD floor");
    tune->add_option("--max-iter", max_iter, "ADMM iteration cap");
    tune->add_flag("--identity-precision", identity, "soft-thresholding mode");
    tune->add_option("--oracle-precision", oracle_path, "true covariance CSV");
    tune->add_option("--out-dir", out_dir, "output directory");

    auto* sim = app.add_subcommand("simulate", "benchmark on synthetic covariance models");
    sim->add_option("--model", model_name, "ma1 | random | hub");
    sim->add_option("--p", p, "dimension");
    sim->add_option("--n", n, "sample size");
    sim->add_option("--reps", reps, "replicate count");
    sim->add_option("--seed", seed, "base seed");
    sim->add_option("--methods", methods_csv, "comma list: splcm, splcm-oracle, soft");
    sim->add_option("--gamma", gamma, "ADMM step");
    sim->add_option("--max-iter", max_iter, "ADMM iteration cap");
    sim->add_flag("--roc", emit_roc, "emit per-replicate ROC point files");
    sim->add_option("--out-dir", out_dir, "output directory");

    auto* qda = app.add_subcommand("qda", "QDA over random stratified splits");
    qda->add_option("--data", data_path, "labeled CSV, last column = class")->required();
    qda->add_option("--splits", splits, "number of random partitions");
    qda->add_option("--train-frac", train_frac, "training fraction per class");
    qda->add_option("--seed", seed, "base seed");
    qda->add_option("--method", method, "per-class covariance: splcm | soft | sample");
    qda->add_option("--rho", rho, "CLIME level for splcm");
    qda->add_option("--gamma", gamma, "ADMM step");
    qda->add_option("--max-iter", max_iter, "ADMM iteration cap");
    qda->add_option("--out-dir", out_dir, "output directory");

    auto* clu = app.add_subcommand("cluster", "correlation-distance hierarchical clustering");
    clu->add_option("--data", data_path, "raw data CSV");
    clu->add_option("--corr", corr_path, "correlation matrix CSV (skips estimation)");
    clu->add_option("--linkage", linkage_name, "average | complete");
    clu->add_option("--method", method, "covariance estimator: splcm | soft | sample");
    clu->add_option("--rho", rho, "CLIME level for splcm");
    clu->add_option("--gamma", gamma, "ADMM step");
    clu->add_option("--max-iter", max_iter, "ADMM iteration cap");
    clu->add_option("--out-dir", out_dir, "output directory");

    auto* boot = app.add_subcommand("bootstrap-v", "bootstrap error covariance of vech(S)");
    boot->add_option("--data", data_path, "raw data CSV")->required();
    boot->add_option("--resamples", resamples, "bootstrap resample count");
    boot->add_option("--seed", seed, "base seed");
    boot->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if ((est->parsed() || tune->parsed()) && data_path.empty() && cov_path.empty())
            throw CLI::ValidationError("one of --data / --cov is required");
        if (clu->parsed() && data_path.empty() && corr_path.empty())
            throw CLI::ValidationError("one of --data / --corr is required");
        fs::create_directories(out_dir);

        if (est->parsed())
            return cmd_estimate(data_path, cov_path, n_flag, center, lambda, rho, tau_flag,
                                gamma, delta, max_iter, identity, oracle_path, matrix_free,
                                out_dir);
        if (tune->parsed())
            return cmd_tune(data_path, cov_path, n_flag, center, lambdas_csv, rhos_csv,
                            lambda_points, gamma, delta, max_iter, identity, oracle_path,
                            out_dir);
        if (sim->parsed())
            return cmd_simulate(model_name, p, n, reps, seed, methods_csv, gamma, max_iter,
                                emit_roc, out_dir);
        if (qda->parsed())
            return cmd_qda(data_path, splits, train_frac, seed, method, rho, gamma, max_iter,
                           out_dir);
        if (clu->parsed())
            return cmd_cluster(data_path, corr_path, linkage_name, method, rho, gamma,
                               max_iter, out_dir);
        if (boot->parsed())
            return cmd_bootstrap_v(data_path, resamples, seed, out_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
