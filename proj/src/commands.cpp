#include "sullivan/commands.hpp"

#include "sullivan/biquotient.hpp"
#include "sullivan/classifier.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/ring_parser.hpp"
#include "sullivan/version.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace sullivan {

namespace {

using json = nlohmann::ordered_json;

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Input, "FileError", "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json ranks_json(const RankTable& rt) {
    json out = json::object();
    for (const auto& [r, n] : rt.ranks)
        if (n != 0) out[std::to_string(r)] = n;
    return out;
}

json betti_json(const QuotientAlgebra& q, int up_to) {
    json out = json::array();
    for (int d = 0; d <= up_to; ++d) out.push_back(q.dim(d));
    return out;
}

json generators_json(const DGA& dga) {
    json out = json::array();
    for (int i = 0; i < dga.algebra.size(); ++i) {
        json g;
        g["name"] = dga.algebra.gen(i).name;
        g["degree"] = dga.algebra.gen(i).degree;
        g["differential"] = dga.algebra.poly_str(dga.differential[i]);
        out.push_back(std::move(g));
    }
    return out;
}

json algebraic_real_json(const AlgebraicReal& r) {
    json out;
    if (r.is_rational()) {
        out["value"] = r.rational_value().str();
    } else {
        out["min_poly"] = r.minimal_poly().str();
        out["interval"] = {r.isolating_interval().lo.str(), r.isolating_interval().hi.str()};
    }
    return out;
}

json tower_json(const TowerPtr& tw) {
    json out;
    out["r1"] = tw->deg1() > 1 ? algebraic_real_json(tw->r1()) : json(nullptr);
    out["r2"] = tw->deg2() > 1 ? algebraic_real_json(tw->r2()) : json(nullptr);
    return out;
}

int target_cap(const Presentation& p, int needed) {
    if (p.formal_dimension) return std::max(*p.formal_dimension, needed);
    return std::max(p.default_cap(), needed);
}

json model_result(const Presentation& pres, int max_degree, bool include_generators) {
    int cap = pres.formal_dimension ? *pres.formal_dimension
                                    : std::max(pres.default_cap(), max_degree + 2);
    QuotientAlgebra q(pres, cap);
    ModelResult mr = build_model(q, max_degree);
    json res;
    res["max_degree"] = max_degree;
    if (include_generators) res["generators"] = generators_json(mr.model.dga);
    res["ranks"] = ranks_json(mr.ranks);
    return res;
}

json classify_result(const Presentation& pres, int dim) {
    json res;
    res["dim"] = dim;
    if (dim == 5) {
        QuotientAlgebra q(pres, target_cap(pres, 5));
        res["betti"] = betti_json(q, 5);
        int b2 = q.dim(2);
        res["b2"] = b2;
        Verdict v = classify_dim5(b2);
        res["verdict"] = to_string(v.tag);
        res["detail"] = v.detail;
        return res;
    }
    QuotientAlgebra q(pres, target_cap(pres, 6));
    res["betti"] = betti_json(q, 6);
    res["b2"] = q.dim(2);
    Verdict v = classify_dim6(q);
    res["verdict"] = to_string(v.tag);
    res["detail"] = v.detail;
    if (q.dim(2) == 2 && q.dim(3) == 0) {
        if (auto sz = find_square_zero_class(q)) {
            json w;
            w["tower"] = tower_json(sz->tower);
            w["s"] = sz->s.str();
            w["t"] = sz->t.str();
            w["class"] = q.algebra().poly_str_generic(sz->cls);
            res["square_zero"] = std::move(w);
        } else if (v.tag == VerdictTag::NotGeometricallyFormal_b2_2) {
            NormalizedPair np = normalize_generators(q);
            json w;
            w["tower"] = tower_json(np.tower);
            w["xbar"] = q.algebra().poly_str_generic(np.xbar);
            w["ybar"] = q.algebra().poly_str_generic(np.ybar);
            w["epsilon"] = np.epsilon;
            w["witness_degree4"] = q.algebra().poly_str_generic(np.witness_degree4);
            w["witness_degree6"] = q.algebra().poly_str_generic(np.witness_degree6);
            res["normalization"] = std::move(w);
        }
    }
    return res;
}

json borel_result(const Presentation& pres) {
    FormalityCertificate cert = borel_model(pres);
    json res;
    res["regular"] = cert.regular;
    res["predicted_series"] = cert.predicted_series;
    res["actual_series"] = cert.actual_series;
    res["model"] = generators_json(cert.model);
    return res;
}

json freeness_result(const ActionMatrix& m) {
    FreenessReport rep = freeness_check(m);
    json res;
    json rows = json::array();
    for (int r = 0; r < 3; ++r) rows.push_back({m.at(r, 0), m.at(r, 1), m.at(r, 2)});
    res["matrix"] = std::move(rows);
    res["diagonal_ok"] = rep.diagonal_ok;
    res["minors"] = {rep.minor_values[0].str(), rep.minor_values[1].str(),
                     rep.minor_values[2].str()};
    res["det"] = rep.det_value.str();
    res["free"] = rep.free;
    return res;
}

json family3_result(std::int64_t b1, std::int64_t c1, std::int64_t c2, bool obstruction) {
    Family3Ring fam = family3_ring(b1, c1, c2);
    json res;
    res["b1"] = b1;
    res["c1"] = c1;
    res["c2"] = c2;
    res["presentation"] = print_presentation(fam.presentation);
    res["betti"] = betti_json(*fam.ring, 6);
    res["poincare_duality"] = poincare_pairing_check(*fam.ring, 6);
    if (obstruction) {
        ObstructionReport rep = formality_obstruction(fam);
        json ob;
        ob["omega2_tilde"] = fam.ring->algebra().poly_str(rep.omega2_tilde);
        ob["omega3_tilde"] = fam.ring->algebra().poly_str(rep.omega3_tilde);
        ob["p"] = rep.p.str();
        ob["q"] = rep.q.str();
        ob["coefficient"] = rep.coefficient.str();
        ob["top_class_nonzero"] = rep.top_class_nonzero;
        ob["verdict"] = to_string(rep.verdict);
        res["obstruction"] = std::move(ob);
    }
    return res;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv, size_t expect,
                                         const char* what) {
    std::vector<std::int64_t> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || tok.empty())
            throw Error(ErrorKind::Input, "UsageError",
                        std::string("bad integer '") + tok + "' in " + what);
        out.push_back(v);
    }
    if (expect != 0 && out.size() != expect)
        throw Error(ErrorKind::Input, "UsageError",
                    std::string(what) + " needs " + std::to_string(expect) + " integers");
    return out;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = args.empty() ? "" : args[0];
    doc["argv"] = args;

    CLI::App app{"exact computation with cohomology rings and their minimal models"};
    app.require_subcommand(1);

    std::string file;
    int max_degree = 8;
    int dim = 6;
    std::string ranks_csv, matrix_csv, family_csv;
    bool obstruction = false;

    CLI::App* cmd_model = app.add_subcommand("model", "staged minimal model of a ring file");
    cmd_model->add_option("file", file)->required();
    cmd_model->add_option("--max-degree", max_degree)->required();

    CLI::App* cmd_ranks = app.add_subcommand("ranks", "homotopy ranks of a ring file");
    cmd_ranks->add_option("file", file)->required();
    cmd_ranks->add_option("--max-degree", max_degree)->required();

    CLI::App* cmd_elliptic = app.add_subcommand("elliptic", "elliptic rank inequalities");
    cmd_elliptic->add_option("--dim", dim)->required();
    cmd_elliptic->add_option("--ranks", ranks_csv)->required();

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify a ring file");
    cmd_classify->add_option("file", file)->required();
    cmd_classify->add_option("--dim", dim)->required()->check(CLI::IsMember({5, 6}));

    CLI::App* cmd_duality = app.add_subcommand("duality", "Poincare pairing check");
    cmd_duality->add_option("file", file)->required();
    cmd_duality->add_option("--dim", dim)->required();

    CLI::App* cmd_biq = app.add_subcommand("biquotient", "torus actions on (S^3)^3");
    cmd_biq->add_option("--matrix", matrix_csv);
    cmd_biq->add_option("--family3", family_csv);
    cmd_biq->add_flag("--obstruction", obstruction);

    CLI::App* cmd_borel = app.add_subcommand("borel", "two-stage model certificate");
    cmd_borel->add_option("file", file)->required();

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());

        std::string input_payload;
        for (const auto& a : args) input_payload += a + "\n";
        if (!file.empty()) input_payload = read_file(file);
        doc["input_digest"] = fnv1a64(input_payload);

        if (cmd_model->parsed() || cmd_ranks->parsed()) {
            if (max_degree < 2 || max_degree > 64)
                throw Error(ErrorKind::Input, "UsageError", "--max-degree must be in 2..64");
            Presentation pres = parse_presentation(read_file(file));
            doc["result"] = model_result(pres, max_degree, cmd_model->parsed());
        } else if (cmd_elliptic->parsed()) {
            if (dim < 2)
                throw Error(ErrorKind::Input, "UsageError", "--dim must be at least 2");
            EllipticProfile prof;
            prof.dimension = dim;
            auto rs = parse_int_list(ranks_csv, 0, "--ranks");
            for (size_t i = 0; i < rs.size(); ++i)
                if (rs[i] != 0) prof.ranks.ranks[(int)i + 2] = (int)rs[i];
            long even = 0, odd = 0;
            for (const auto& [r, n] : prof.ranks.ranks)
                (r % 2 == 0 ? even : odd) += (long)r * n;
            json res;
            res["dimension"] = dim;
            res["ranks"] = ranks_json(prof.ranks);
            res["even_weighted_sum"] = even;
            res["even_bound"] = dim;
            res["odd_weighted_sum"] = odd;
            res["odd_bound"] = 2 * dim - 1;
            res["elliptic"] = check_elliptic_inequalities(prof);
            doc["result"] = std::move(res);
        } else if (cmd_classify->parsed()) {
            Presentation pres = parse_presentation(read_file(file));
            doc["result"] = classify_result(pres, dim);
        } else if (cmd_duality->parsed()) {
            Presentation pres = parse_presentation(read_file(file));
            QuotientAlgebra q(pres, target_cap(pres, dim));
            json res;
            res["dim"] = dim;
            res["betti"] = betti_json(q, q.cap());
            res["poincare_duality"] = poincare_pairing_check(q, dim);
            doc["result"] = std::move(res);
        } else if (cmd_biq->parsed()) {
            if (matrix_csv.empty() == family_csv.empty())
                throw Error(ErrorKind::Input, "UsageError",
                            "biquotient needs exactly one of --matrix or --family3");
            if (!matrix_csv.empty()) {
                auto v = parse_int_list(matrix_csv, 9, "--matrix");
                ActionMatrix m;
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) m.e[r][c] = v[r * 3 + c];
                doc["result"] = freeness_result(m);
            } else {
                auto v = parse_int_list(family_csv, 3, "--family3");
                doc["result"] = family3_result(v[0], v[1], v[2], obstruction);
            }
        } else if (cmd_borel->parsed()) {
            Presentation pres = parse_presentation(read_file(file));
            doc["result"] = borel_result(pres);
        }
        return {std::move(doc), 0};
    } catch (const CLI::ParseError& e) {
        json err;
        err["name"] = "UsageError";
        err["message"] = e.what();
        err["exit_code"] = 1;
        doc["error"] = std::move(err);
        return {std::move(doc), 1};
    } catch (const Error& e) {
        int code = e.kind() == ErrorKind::Input ? 1
                   : e.kind() == ErrorKind::Precondition ? 2
                                                         : 3;
        json err;
        err["name"] = e.name();
        err["message"] = e.what();
        err["exit_code"] = code;
        doc["error"] = std::move(err);
        return {std::move(doc), code};
    } catch (const std::exception& e) {
        json err;
        err["name"] = "InternalError";
        err["message"] = e.what();
        err["exit_code"] = 3;
        doc["error"] = std::move(err);
        return {std::move(doc), 3};
    }
}

}  // namespace sullivan
