// cqharm: command-line front end for the cyclic quiver harmonic library.

#include <cyclic_quiver/cyclic_quiver.hpp>
#include <cyclic_quiver/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cyclic_quiver;

namespace {

enum Exit { exit_ok = 0, exit_validation = 2, exit_capacity = 3, exit_verification = 4, exit_internal = 1 };

constexpr int max_cli_degree = 16;
constexpr int max_cli_boxes = 12;
constexpr int max_exponent_rank = 8;

struct Failure {
    int status;
    std::string code;
    std::string message;
};

[[noreturn]] void fail(int status, std::string code, std::string message)
{
    throw Failure{status, std::move(code), std::move(message)};
}

json parse_json_text(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(exit_validation, "malformed_json", what + ": " + e.what());
    }
}

// Inline JSON if it looks like an object, otherwise a file path.
json load_json_argument(const std::string& arg, const std::string& what)
{
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, what);
    std::ifstream in(arg);
    if (!in) fail(exit_validation, "file_not_found", what + ": cannot open '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), what);
}

// "[2,1]", "2,1", "" and "[]" are all accepted.
std::vector<int> int_list(const std::string& arg, const std::string& what)
{
    std::string text = arg;
    auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    if (text[first] != '[') text = "[" + text + "]";
    json j = parse_json_text(text, what);
    try {
        return detail::int_array(j, what.c_str());
    } catch (const UsageError& e) {
        fail(exit_validation, "schema_violation", e.what());
    }
}

Partition partition_argument(const std::string& arg, const std::string& what)
{
    auto parts = int_list(arg, what);
    try {
        return partition_from_json(json(parts));
    } catch (const UsageError& e) {
        fail(exit_validation, "schema_violation", what + ": " + e.what());
    }
}

KType ktype_argument(const std::string& arg)
{
    json j = load_json_argument(arg, "--ktype");
    try {
        return ktype_from_json(j);
    } catch (const UsageError& e) {
        fail(exit_validation, "schema_violation", std::string("--ktype: ") + e.what());
    }
}

void check_degree(int d)
{
    if (d < 0) fail(exit_validation, "invalid_argument", "--max-degree must be nonnegative");
    if (d > max_cli_degree)
        fail(exit_capacity, "capacity_exceeded", "--max-degree is limited to " + std::to_string(max_cli_degree));
}

void check_ktype_size(const KType& nu)
{
    if (nu.total_boxes() > max_cli_boxes)
        fail(exit_capacity, "capacity_exceeded",
             "K-types are limited to " + std::to_string(max_cli_boxes) + " boxes in total");
}

int first_mismatch(const QSeries& a, const QSeries& b)
{
    int top = std::min(a.truncation(), b.truncation());
    for (int d = 0; d <= top; ++d)
        if (a[d] != b[d]) return d;
    return -1;
}

std::string ktype_text(const KType& nu)
{
    std::ostringstream os;
    for (int i = 1; i <= nu.k(); ++i) {
        if (i > 1) os << ' ';
        os << '(' << nu.node(i).plus << ';' << nu.node(i).minus << ')';
    }
    return os.str();
}

struct Report {
    json data;
    std::string text;
    int status = exit_ok;
};

// ---- subcommands ----

Report run_stable_mult(const std::string& ktype, int max_degree, int threads)
{
    KType nu = ktype_argument(ktype);
    check_degree(max_degree);
    check_ktype_size(nu);
    QSeries s = stable_multiplicity(nu, max_degree, threads);
    return {to_json(s), s.to_string()};
}

Report run_distinguished(const std::string& ktype, int max_degree, int threads)
{
    KType nu = ktype_argument(ktype);
    check_degree(max_degree);
    check_ktype_size(nu);
    auto rows = enumerate_distinguished(nu, max_degree, threads);
    json list = json::array();
    std::ostringstream text;
    for (const auto& row : rows) {
        json entry{{"tuple", to_json(row.tuple)}};
        entry.update(to_json(row.profile));
        list.push_back(std::move(entry));
        text << "degree " << row.profile.degree << "  lambda_min " << row.profile.lambda_min << "  tuple "
             << to_json(row.tuple).dump() << '\n';
    }
    text << rows.size() << " tuple(s)";
    json out{{"ktype", to_json(nu)}, {"max_degree", max_degree}, {"count", rows.size()}, {"rows", std::move(list)}};
    return {std::move(out), text.str()};
}

Report run_lr(const std::string& lambda, const std::string& alpha, const std::string& nu)
{
    ClrQuery q{partition_argument(lambda, "--lambda"), partition_argument(alpha, "--alpha"),
               partition_argument(nu, "--nu")};
    if (q.lambda.size() > 2 * max_cli_boxes)
        fail(exit_capacity, "capacity_exceeded", "--lambda is limited to " + std::to_string(2 * max_cli_boxes) + " boxes");
    auto crystal = lr_coefficient_crystal(q);
    auto classical = lr_coefficient_classical(q);
    bool agree = crystal == classical;
    std::ostringstream text;
    text << "crystal " << crystal << "\nclassical " << classical << "\nagree " << (agree ? "yes" : "no");
    return {json{{"crystal", crystal}, {"classical", classical}, {"agree", agree}}, text.str(),
            agree ? exit_ok : exit_verification};
}

Report verdict(const std::string& mode, const KType& nu, int max_degree, bool pass, json counterexample)
{
    json out{{"mode", mode}, {"ktype", to_json(nu)}, {"max_degree", max_degree}, {"pass", pass}};
    std::string text = mode + ": " + (pass ? "pass" : "FAIL");
    if (!pass) {
        text += " " + counterexample.dump();
        out["counterexample"] = std::move(counterexample);
    }
    return {std::move(out), text, pass ? exit_ok : exit_verification};
}

json series_mismatch(const std::string& left_name, const QSeries& left, const std::string& right_name,
                     const QSeries& right)
{
    return json{{"degree", first_mismatch(left, right)}, {left_name, to_json(left)}, {right_name, to_json(right)}};
}

std::vector<int> dims_argument(const std::string& dims, int k)
{
    auto d = int_list(dims, "--dims");
    if (d.empty()) fail(exit_validation, "invalid_argument", "--dims must list at least one dimension");
    if (k > 0 && d.size() == 1) d.assign(static_cast<std::size_t>(k), d.front());
    if (k > 0 && static_cast<int>(d.size()) != k)
        fail(exit_validation, "invalid_argument", "--dims must have k entries (or a single entry)");
    for (int x : d)
        if (x < 1) fail(exit_validation, "invalid_argument", "--dims entries must be positive");
    return d;
}

Report run_verify(const std::string& mode, const std::string& ktype, int max_degree, const std::string& dims, int n,
                  int threads)
{
    KType nu = ktype_argument(ktype);
    check_degree(max_degree);
    check_ktype_size(nu);

    if (mode == "separation") {
        bool ok = separation_check(nu, max_degree, threads);
        json ce;
        if (!ok) {
            QSeries raw = raw_branching_sum(nu, max_degree);
            QSeries rhs = mul(partition_series(nu.k(), max_degree), stable_multiplicity(nu, max_degree, threads));
            ce = series_mismatch("raw_sum", raw, "separated", rhs);
        }
        return verdict(mode, nu, max_degree, ok, std::move(ce));
    }
    if (mode == "definition") {
        QSeries fast = stable_multiplicity(nu, max_degree, threads);
        QSeries slow = stable_multiplicity_definition(nu, max_degree);
        return verdict(mode, nu, max_degree, fast == slow, series_mismatch("tableaux", fast, "definition", slow));
    }
    if (mode == "character") {
        if (dims.empty()) fail(exit_validation, "invalid_argument", "--mode character needs --dims");
        QuiverConfig cfg(nu.k(), dims_argument(dims, nu.k()));
        if (max_degree > cfg.n())
            fail(exit_validation, "precondition",
                 "--max-degree must not exceed min(dims) = " + std::to_string(cfg.n()) + " in character mode");
        QSeries oracle = harmonic_multiplicity_oracle(cfg, nu, max_degree);
        QSeries fast = stable_multiplicity(nu, max_degree, threads);
        return verdict(mode, nu, max_degree, fast == oracle, series_mismatch("tableaux", fast, "oracle", oracle));
    }
    if (mode == "hesselink") {
        if (nu.k() != 1) fail(exit_validation, "invalid_argument", "--mode hesselink needs a K-type with k = 1");
        const auto& node = nu.node(1);
        int rank = n > 0 ? n : max_degree + node.plus.length() + node.minus.length() + 1;
        if (rank > max_exponent_rank)
            fail(exit_capacity, "capacity_exceeded", "rank is limited to " + std::to_string(max_exponent_rank));
        if (node.plus.length() + node.minus.length() > rank)
            fail(exit_validation, "precondition", "K-type is not realizable in the requested rank");
        QSeries fast = stable_multiplicity(nu, max_degree, threads);
        QSeries exact = hesselink_exponent(rational_weight(node.plus, node.minus, rank), max_degree);
        return verdict(mode, nu, max_degree, fast == exact, series_mismatch("tableaux", fast, "hesselink", exact));
    }
    fail(exit_validation, "invalid_argument", "unknown verify mode '" + mode + "'");
}

Report run_exponents(int n, const std::string& weight, int max_degree)
{
    if (n < 1) fail(exit_validation, "invalid_argument", "--n must be positive");
    if (n > max_exponent_rank)
        fail(exit_capacity, "capacity_exceeded", "--n is limited to " + std::to_string(max_exponent_rank));
    auto entries = int_list(weight, "--weight");
    if (static_cast<int>(entries.size()) != n)
        fail(exit_validation, "invalid_argument", "--weight must have exactly n entries");
    RationalWeight lam;
    try {
        lam = RationalWeight(entries);
    } catch (const UsageError& e) {
        fail(exit_validation, "invalid_argument", std::string("--weight: ") + e.what());
    }
    if (max_degree < 0) {
        // Height of lam in simple roots bounds the degree of the polynomial.
        int height = 0, partial = 0;
        for (int i = 0; i + 1 < n; ++i) height += (partial += entries[static_cast<std::size_t>(i)]);
        max_degree = std::max(0, height);
    }
    if (max_degree > 4 * max_cli_degree)
        fail(exit_capacity, "capacity_exceeded", "--max-degree is limited to " + std::to_string(4 * max_cli_degree));
    QSeries s = hesselink_exponent(lam, max_degree);
    return {to_json(s), s.to_string()};
}

Report run_oracle(const std::string& dims, int k, int max_degree)
{
    if (k < 0) fail(exit_validation, "invalid_argument", "--k must be positive");
    auto d = dims_argument(dims, k);
    const int nodes = static_cast<int>(d.size());
    QuiverConfig cfg(nodes, std::move(d));
    if (max_degree < 0) max_degree = cfg.n();
    auto table = harmonic_multiplicity_table(cfg, max_degree);
    json rows = json::array();
    std::ostringstream text;
    for (const auto& [nu, s] : table) {
        if (s.is_zero()) continue;
        rows.push_back(json{{"ktype", to_json(nu)}, {"series", to_json(s)}});
        text << ktype_text(nu) << "  " << s.to_string() << '\n';
    }
    text << rows.size() << " K-type(s)";
    json out{{"k", cfg.k()}, {"dims", cfg.dims()}, {"max_degree", max_degree}, {"table", std::move(rows)}};
    return {std::move(out), text.str()};
}

void emit_error(const std::string& code, const std::string& message)
{
    json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << std::endl;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded K-type multiplicities for cyclic quiver representations"};
    app.require_subcommand(1);

    std::string format = "json";
    int threads = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);

    std::string ktype, lambda, alpha, nu, mode, dims, weight;
    int max_degree = -1, n = 0, k = 0;

    auto* stable = app.add_subcommand("stable-mult", "Stable multiplicity series of a K-type");
    stable->add_option("--ktype", ktype, "K-type JSON (inline or file path)")->required();
    stable->add_option("--max-degree", max_degree, "Truncation degree")->required();

    auto* dist = app.add_subcommand("distinguished", "List distinguished tableau tuples");
    dist->add_option("--ktype", ktype, "K-type JSON (inline or file path)")->required();
    dist->add_option("--max-degree", max_degree, "Largest degree listed")->required();

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient by both rules");
    lr->add_option("--lambda", lambda, "Outer partition")->required();
    lr->add_option("--alpha", alpha, "First inner partition")->required();
    lr->add_option("--nu", nu, "Second inner partition")->required();

    auto* verify = app.add_subcommand("verify", "Cross-check the stable multiplicity against an oracle");
    verify->add_option("--mode", mode, "Oracle to compare against")
        ->required()
        ->check(CLI::IsMember({"definition", "character", "hesselink", "separation"}));
    verify->add_option("--ktype", ktype, "K-type JSON (inline or file path)")->required();
    verify->add_option("--max-degree", max_degree, "Truncation degree")->required();
    verify->add_option("--dims", dims, "Node dimensions (character mode)");
    verify->add_option("--n", n, "Rank (hesselink mode)");

    auto* exps = app.add_subcommand("exponents", "Generalized exponents of GL_n");
    exps->add_option("--n", n, "Rank")->required();
    exps->add_option("--weight", weight, "Dominant weight, n integers")->required();
    exps->add_option("--max-degree", max_degree, "Truncation degree (default: exact)");

    auto* orc = app.add_subcommand("oracle", "Graded K-type table of the harmonics of a small quiver");
    orc->add_option("--dims", dims, "Node dimensions")->required();
    orc->add_option("--k", k, "Number of nodes");
    orc->add_option("--max-degree", max_degree, "Largest degree (default: min dims)");

    for (auto* sub : {stable, dist, lr, verify, exps, orc}) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return exit_validation;
    }

    try {
        Report report;
        if (*stable)
            report = run_stable_mult(ktype, max_degree, threads);
        else if (*dist)
            report = run_distinguished(ktype, max_degree, threads);
        else if (*lr)
            report = run_lr(lambda, alpha, nu);
        else if (*verify)
            report = run_verify(mode, ktype, max_degree, dims, n, threads);
        else if (*exps)
            report = run_exponents(n, weight, max_degree);
        else
            report = run_oracle(dims, k, max_degree);
        if (format == "text")
            std::cout << report.text << '\n';
        else
            std::cout << report.data.dump() << '\n';
        return report.status;
    } catch (const Failure& f) {
        emit_error(f.code, f.message);
        return f.status;
    } catch (const CapacityError& e) {
        emit_error("capacity_exceeded", e.what());
        return exit_capacity;
    } catch (const PreconditionError& e) {
        emit_error("precondition", e.what());
        return exit_validation;
    } catch (const UsageError& e) {
        emit_error("invalid_argument", e.what());
        return exit_validation;
    } catch (const std::exception& e) {
        emit_error("internal_error", e.what());
        return exit_internal;
    }
}
