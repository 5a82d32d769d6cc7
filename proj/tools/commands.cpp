#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exflat/flatten.hpp"
#include "exflat/ideal.hpp"
#include "exflat/rep.hpp"
#include "exflat/secant.hpp"
#include "exflat/tensor_io.hpp"

namespace exflat::cli {

namespace {

using nlohmann::ordered_json;

std::uint64_t default_prime() {
    if (const char* env = std::getenv("KAPPA_PRIME")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("KAPPA_PRIME is not a valid integer");
        }
    }
    return kDefaultPrime;
}

ordered_json partition_json(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

ordered_json summands_json(const std::vector<SchurSummand>& summands) {
    ordered_json list = ordered_json::array();
    for (const auto& s : summands) {
        ordered_json item;
        item["U"] = partition_json(s.u);
        item["V"] = partition_json(s.v);
        if (s.w) item["W"] = partition_json(*s.w);
        item["mult"] = s.multiplicity;
        item["dim"] = s.dimension.get_str();
        list.push_back(std::move(item));
    }
    return list;
}

ordered_json flattening_json(const FlatteningMatrix& f) {
    ordered_json j;
    j["j"] = f.j;
    j["rows"] = f.matrix.rows();
    j["cols"] = f.matrix.cols();
    ordered_json entries = ordered_json::array();
    for (int r = 0; r < f.matrix.rows(); ++r)
        for (int c = 0; c < f.matrix.cols(); ++c)
            entries.push_back(rational_to_string(f.matrix.at(r, c)));
    j["entries"] = std::move(entries);
    auto labels = [](const std::vector<std::pair<int, std::vector<int>>>& ls) {
        ordered_json out = ordered_json::array();
        for (const auto& [idx, subset] : ls) out.push_back(ordered_json::array({idx, subset}));
        return out;
    };
    j["row_labels"] = labels(f.row_labels);
    j["col_labels"] = labels(f.col_labels);
    return j;
}

ordered_json certificate_json(const MembershipCertificate& cert) {
    ordered_json j;
    j["r"] = cert.r;
    j["member"] = cert.member;
    j["theorem_backed"] = cert.theorem_backed;
    j["kappa"] = cert.kappa.values;
    j["violated_stage"] = cert.violated_stage ? ordered_json(*cert.violated_stage)
                                              : ordered_json(nullptr);
    if (!cert.witness_rows.empty()) j["witness_rows"] = cert.witness_rows;
    if (!cert.witness_cols.empty()) j["witness_cols"] = cert.witness_cols;
    if (!cert.witness_principal.empty()) j["witness_principal"] = cert.witness_principal;
    return j;
}

void emit(std::ostream& out, const ordered_json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

struct SpanRequest {
    std::string which;
    int m = 0, n = 0;
    int k = -1;
    std::string j_arg;
    int size = 0;
    std::uint64_t prime = 0;
    std::string export_path;
};

ordered_json run_span(const SpanRequest& req) {
    const bool symmetric = req.k < 0;
    const std::uint64_t p = req.prime ? req.prime : default_prime();

    std::vector<SparsePoly> gens;
    int degree = 0;
    if (req.which == "minors") {
        if (req.j_arg.empty()) throw std::invalid_argument("--j is required for --which minors");
        const int j = std::stoi(req.j_arg);
        gens = minor_generators(req.m, req.n, symmetric ? req.n : req.k, symmetric, j, req.size);
        degree = req.size;
    } else if (req.which == "pfaffians") {
        if (req.m != 3 || !symmetric)
            throw std::invalid_argument("pfaffians require --m 3 and no --k (symmetric case)");
        gens = pfaffian_generators(req.n, req.size);
        degree = req.size / 2;
    } else if (req.which == "both") {
        if (req.m != 3 || !symmetric)
            throw std::invalid_argument("--which both requires --m 3 and no --k (symmetric case)");
        if (!req.j_arg.empty() && req.j_arg != "mixed")
            throw std::invalid_argument("--which both uses --j mixed");
        // Degree-matched union: size x size minors of psi_0 plus 2*size
        // principal Pfaffians, both of degree `size`.
        gens = minor_generators(req.m, req.n, req.n, true, 0, req.size);
        auto pf = pfaffian_generators(req.n, 2 * req.size);
        gens.insert(gens.end(), std::make_move_iterator(pf.begin()),
                    std::make_move_iterator(pf.end()));
        degree = req.size;
    } else {
        throw std::invalid_argument("--which must be minors, pfaffians or both");
    }

    if (!req.export_path.empty()) {
        std::ofstream f(req.export_path);
        if (!f) throw std::runtime_error(req.export_path + ": cannot open for writing");
        write_generators(f, gens);
    }

    ordered_json j;
    j["degree"] = degree;
    j["num_generators"] = gens.size();
    j["span_dim"] = span_dimension(gens, p);
    j["prime"] = p;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact border-rank certificates and secant-variety equations "
                 "for 3-tensors via exterior flattenings"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent the JSON report");

    // kappa
    auto* kappa_cmd = app.add_subcommand("kappa", "Kappa vector and border-rank lower bound");
    std::string kappa_file;
    int dump_j = -1;
    kappa_cmd->add_option("file", kappa_file, "TensorFileV1 input")->required();
    kappa_cmd->add_option("--dump-matrix", dump_j, "Also emit the j-th exterior flattening");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Membership test for sigma_r");
    std::string certify_file;
    int certify_r = 0;
    certify_cmd->add_option("file", certify_file, "TensorFileV1 input")->required();
    certify_cmd->add_option("--r", certify_r, "Secant index r")->required();

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "Schur module decomposition formulas");
    std::string dec_mode;
    int dec_m = 0, dec_n = 0, dec_k = -1, dec_r = 0;
    dec_cmd->add_option("--mode", dec_mode, "kappa0 | kappa1sym | kappa1nonsym")->required();
    dec_cmd->add_option("--m", dec_m, "dim U")->required();
    dec_cmd->add_option("--n", dec_n, "dim V")->required();
    dec_cmd->add_option("--k", dec_k, "dim W (kappa1nonsym; default n)");
    dec_cmd->add_option("--r", dec_r, "r (kappa0/kappa1sym) or c (kappa1nonsym)")->required();

    // span-dim
    auto* span_cmd = app.add_subcommand("span-dim", "Span dimension of ideal generators over F_p");
    SpanRequest span_req;
    span_cmd->add_option("--which", span_req.which, "minors | pfaffians | both")->required();
    span_cmd->add_option("--m", span_req.m, "dim U")->required();
    span_cmd->add_option("--n", span_req.n, "dim V")->required();
    span_cmd->add_option("--k", span_req.k, "dim W (omit for the partially symmetric case)");
    span_cmd->add_option("--j", span_req.j_arg, "flattening index, or 'mixed' with --which both");
    span_cmd->add_option("--size", span_req.size, "minor size (Pfaffians: subset size)")->required();
    span_cmd->add_option("--prime", span_req.prime, "modulus (default KAPPA_PRIME or 2^31-1)");
    span_cmd->add_option("--export-generators", span_req.export_path,
                         "Write generators as monomial-coefficient text");

    // dim-probe
    auto* dim_cmd = app.add_subcommand("dim-probe", "Randomized Terracini dimension of sigma_r");
    int dim_m = 0, dim_n = 0, dim_r = 0, dim_trials = 5;
    std::uint64_t dim_seed = 0, dim_prime = 0;
    dim_cmd->add_option("--m", dim_m, "dim U")->required();
    dim_cmd->add_option("--n", dim_n, "dim V")->required();
    dim_cmd->add_option("--r", dim_r, "secant index")->required();
    dim_cmd->add_option("--trials", dim_trials, "samples to take the max over");
    dim_cmd->add_option("--seed", dim_seed, "PRNG seed");
    dim_cmd->add_option("--prime", dim_prime, "modulus (default KAPPA_PRIME or 2^31-1)");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Write a random rank-r tensor file");
    int gen_m = 0, gen_n = 0, gen_rank = 0;
    std::uint64_t gen_seed = 0;
    bool gen_symmetric = false;
    std::string gen_out;
    gen_cmd->add_option("--m", gen_m, "dim U")->required();
    gen_cmd->add_option("--n", gen_n, "dim V")->required();
    gen_cmd->add_option("--rank", gen_rank, "number of decomposable terms")->required();
    gen_cmd->add_option("--seed", gen_seed, "PRNG seed");
    gen_cmd->add_flag("--symmetric", gen_symmetric, "partially symmetric tensor");
    gen_cmd->add_option("-o,--output", gen_out, "output path")->required();

    std::vector<const char*> argv;
    argv.push_back("exflat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*kappa_cmd) {
            const Tensor3 x = read_tensor_file(kappa_file);
            ordered_json j;
            j["kappa"] = kappa(x).values;
            j["lower_bound"] = border_rank_lower_bound(x);
            if (kappa_cmd->count("--dump-matrix"))
                j["matrix"] = flattening_json(exterior_flattening(x, dump_j));
            emit(out, j, pretty);
        } else if (*certify_cmd) {
            const Tensor3 x = read_tensor_file(certify_file);
            emit(out, certificate_json(certify_membership(x, certify_r)), pretty);
        } else if (*dec_cmd) {
            std::vector<SchurSummand> summands;
            if (dec_mode == "kappa0") {
                summands = decompose_kappa0(dec_m, dec_n, dec_r);
            } else if (dec_mode == "kappa1sym") {
                if (dec_m != 3) throw std::invalid_argument("kappa1sym requires --m 3");
                summands = decompose_kappa1_sym(dec_n, dec_r);
            } else if (dec_mode == "kappa1nonsym") {
                if (dec_m != 3) throw std::invalid_argument("kappa1nonsym requires --m 3");
                summands = decompose_kappa1_nonsym_bound(dec_n, dec_k < 0 ? dec_n : dec_k, dec_r);
            } else {
                throw std::invalid_argument("--mode must be kappa0, kappa1sym or kappa1nonsym");
            }
            ordered_json j;
            j["mode"] = dec_mode;
            j["summands"] = summands_json(summands);
            j["total_dim"] = total_dimension(summands).get_str();
            emit(out, j, pretty);
        } else if (*span_cmd) {
            emit(out, run_span(span_req), pretty);
        } else if (*dim_cmd) {
            const std::uint64_t p = dim_prime ? dim_prime : default_prime();
            ordered_json j;
            j["dim"] = terracini_dimension(dim_m, dim_n, dim_r, dim_trials, dim_seed, p);
            j["m"] = dim_m;
            j["n"] = dim_n;
            j["r"] = dim_r;
            j["trials"] = dim_trials;
            j["seed"] = dim_seed;
            j["prime"] = p;
            emit(out, j, pretty);
        } else if (*gen_cmd) {
            const Tensor3 x = random_rank_r(gen_m, gen_n, gen_rank, gen_seed, gen_symmetric);
            write_tensor_file(gen_out, x);
            ordered_json j;
            j["file"] = gen_out;
            j["m"] = gen_m;
            j["n"] = gen_n;
            j["rank"] = gen_rank;
            j["seed"] = gen_seed;
            j["symmetric"] = gen_symmetric;
            emit(out, j, pretty);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace exflat::cli
