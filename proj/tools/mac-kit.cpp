// mac-kit: exact (co)homology, products and manifold checks for real
// moment-angle complexes (D^1,S^0)^K and the polyhedral products
// (D^{j_i},S^{j_i-1})^K, driven by plain-text complex files.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mackit/dga.hpp"
#include "mackit/homology.hpp"
#include "mackit/io.hpp"
#include "mackit/manifold.hpp"
#include "mackit/products.hpp"
#include "mackit/simplicial.hpp"
#include "mackit/word_complex.hpp"

using json = nlohmann::json;
using namespace mackit;

namespace {

struct RunConfig {
    std::string input;
    std::string jspec;
    std::string format = "text";
    int cap = 16;
    int parallel = 0;
};

JTuple parse_jtuple(const std::string& spec, int m) {
    if (spec.empty()) return JTuple::ones(m);
    std::vector<int> entries;
    std::string tok;
    std::istringstream ss(spec);
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int j = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            entries.push_back(j);
        } catch (const std::logic_error&) {
            throw parse_error("invalid J entry '" + tok + "'");
        }
    }
    if (int(entries.size()) == 1 && m != 1)
        entries.assign(size_t(m), entries[0]);  // --J 2 means the constant tuple
    if (int(entries.size()) != m)
        throw parse_error("J has " + std::to_string(entries.size()) +
                          " entries, expected " + std::to_string(m));
    return JTuple(entries);
}

json group_json(const HomologyGroup& g) {
    json out;
    out["rank"] = g.rank;
    out["torsion"] = g.torsion;
    return out;
}

std::string labels_text(const std::vector<int>& labels) {
    std::string out = "{";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(labels[i]);
    }
    return out + "}";
}

void emit(const RunConfig& cfg, const std::string& text, const json& j) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------------------
// betti: H_*((D^1,S^0)^{K(J)}) plus the per-subset contribution table.
// ---------------------------------------------------------------------------

int cmd_betti(const RunConfig& cfg) {
    SimplicialComplex K = load_complex_file(cfg.input);
    JTuple J = parse_jtuple(cfg.jspec, K.vertex_count());
    SimplicialComplex KJ = J.all_ones() ? K : kj_construction(K, J);
    auto table = reduced_homology_all_subsets(KJ, cfg.cap, cfg.parallel);
    auto h = table.word_homology();

    int top = h.groups.empty() ? 0 : h.highest_degree();
    std::ostringstream text;
    json j;
    j["command"] = "betti";
    j["m"] = K.vertex_count();
    j["J"] = J.entries;
    j["dJ"] = J.d();
    text << "b =";
    std::vector<long long> betti;
    for (int p = 0; p <= top; ++p) betti.push_back(h.at(p).rank);
    for (size_t p = 0; p < betti.size(); ++p)
        text << (p ? "," : " ") << betti[p];
    text << "\n";
    j["betti"] = betti;
    json torsion = json::object();
    for (int p = 0; p <= top; ++p)
        if (!h.at(p).torsion.empty()) {
            torsion[std::to_string(p)] = h.at(p).torsion;
            text << "torsion in degree " << p << ":";
            for (long long t : h.at(p).torsion) text << " Z/" << t;
            text << "\n";
        }
    j["torsion"] = torsion;

    text << "contributions (omega, degree, reduced homology):\n";
    json rows = json::array();
    for (vset w = 0; w < table.by_mask.size(); ++w) {
        const auto& gh = table.at(w).homology;
        for (int p = gh.lowest_degree; p <= gh.highest_degree(); ++p) {
            if (gh.at(p).trivial()) continue;
            text << "  omega=" << labels_text(vs::elements(w)) << " degree=" << p + 1
                 << " " << gh.at(p).to_string() << "\n";
            json row;
            row["omega"] = vs::elements(w);
            row["degree"] = p + 1;
            row["group"] = group_json(gh.at(p));
            rows.push_back(row);
        }
    }
    j["table"] = rows;
    emit(cfg, text.str(), j);
    return 0;
}

// ---------------------------------------------------------------------------
// ring: eta_J representatives per subset and their product table.
// ---------------------------------------------------------------------------

struct RingRep {
    DgaElement elem;
    vset omega = 0;
    int degree = 0;
    std::string label;
};

std::vector<RingRep> ring_representatives(const std::shared_ptr<const Dga>& R) {
    const SimplicialComplex& K = R->complex();
    std::vector<RingRep> reps;
    for (vset omega = 0;; ++omega) {
        // augmented simplicial cochain presentations of K_omega by level
        std::vector<std::vector<vset>> levels = R->summand_levels(omega);
        const int card = vs::card(omega);
        auto matrix = [&](int from) {
            const auto& src = levels[size_t(from)];
            static const std::vector<vset> none;
            const auto& dst = from + 1 < int(levels.size()) ? levels[size_t(from) + 1]
                                                            : none;
            IntMat M(int(dst.size()), int(src.size()));
            for (size_t j = 0; j < src.size(); ++j)
                for (int i : vs::elements(omega & ~src[j])) {
                    vset bigger = vs::add(src[j], i);
                    if (!K.is_simplex_mask(bigger)) continue;
                    auto it = std::lower_bound(dst.begin(), dst.end(), bigger,
                                               vs::lex_less);
                    M(int(it - dst.begin()), int(j)) =
                        vs::order_sign_exp(i, src[j]) % 2 ? -1 : 1;
                }
            return M;
        };
        for (int level = 0; level <= card; ++level) {
            IntMat outgoing = matrix(level);
            IntMat incoming = level > 0 ? matrix(level - 1)
                                        : IntMat(int(levels[size_t(level)].size()), 0);
            QuotientPresentation pres(outgoing, incoming);
            for (int g = 0; g < pres.free_rank(); ++g) {
                auto vec = pres.free_generator(g);
                DgaElement elem = R->zero();
                for (size_t i = 0; i < vec.size(); ++i)
                    if (vec[i] != 0)
                        elem += static_cast<long long>(vec[i]) *
                                R->eta_J(levels[size_t(level)][i], omega);
                RingRep rep;
                rep.elem = elem;
                rep.omega = omega;
                rep.degree = *R->homogeneous_degree(elem);
                reps.push_back(std::move(rep));
            }
        }
        if (omega == vs::full(K.vertex_count())) break;
    }
    for (size_t i = 0; i < reps.size(); ++i)
        reps[i].label = "g" + std::to_string(i + 1);
    return reps;
}

int cmd_ring(const RunConfig& cfg, const std::vector<std::string>& triples) {
    SimplicialComplex K = load_complex_file(cfg.input);
    JTuple J = parse_jtuple(cfg.jspec, K.vertex_count());
    if (J.d() > cfg.cap) throw resource_error("d(J) exceeds the cap");
    auto R = Dga::make(K, J);
    auto reps = ring_representatives(R);

    std::vector<DgaElement> elems;
    for (const auto& r : reps) elems.push_back(r.elem);
    auto table = ring_product_table(R, elems);

    std::ostringstream text;
    json j;
    j["command"] = "ring";
    j["m"] = K.vertex_count();
    j["J"] = J.entries;
    text << "representatives:\n";
    json jreps = json::array();
    for (const auto& r : reps) {
        text << "  " << r.label << " = " << r.elem.to_string() << "  (omega="
             << labels_text(vs::elements(r.omega)) << ", deg " << r.degree << ")\n";
        json jr;
        jr["label"] = r.label;
        jr["element"] = r.elem.to_string();
        jr["omega"] = vs::elements(r.omega);
        jr["degree"] = r.degree;
        jreps.push_back(jr);
    }
    j["representatives"] = jreps;

    text << "pairwise products (classes):\n";
    json jprod = json::array();
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = 0; b < reps.size(); ++b) {
            const auto& e = table.pairwise[a][b];
            std::string value = e.zero_cochain ? "0"
                                : e.zero_class ? "0 (cochain " + e.product.to_string() +
                                                     " is a coboundary)"
                                               : e.product.to_string();
            text << "  " << reps[a].label << "*" << reps[b].label << " = " << value
                 << "\n";
            json row;
            row["left"] = reps[a].label;
            row["right"] = reps[b].label;
            row["product"] = e.product.to_string();
            row["zero_class"] = e.zero_class;
            jprod.push_back(row);
        }
    j["products"] = jprod;

    if (!triples.empty()) {
        if (triples.size() != 3) throw parse_error("--triples expects three subsets");
        DgaClassCalculator calc(R);
        std::vector<std::vector<size_t>> pick(3);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> labels;
            std::istringstream ss(triples[size_t(t)]);
            std::string tok;
            while (std::getline(ss, tok, ',')) labels.push_back(std::stoi(tok));
            vset w = vs::from_labels(labels);
            for (size_t i = 0; i < reps.size(); ++i)
                if (reps[i].omega == w) pick[size_t(t)].push_back(i);
            if (pick[size_t(t)].empty())
                throw input_error("no representative lives on omega=" +
                                  triples[size_t(t)]);
        }
        text << "triple products:\n";
        json jtriples = json::array();
        for (size_t a : pick[0])
            for (size_t b : pick[1])
                for (size_t c : pick[2]) {
                    auto prod = R->multiply(R->multiply(elems[a], elems[b]), elems[c]);
                    bool zero = prod.zero() || calc.is_trivial_class(prod);
                    text << "  " << reps[a].label << "*" << reps[b].label << "*"
                         << reps[c].label << " = "
                         << (zero ? "0" : prod.to_string()) << "\n";
                    json row;
                    row["factors"] = {reps[a].label, reps[b].label, reps[c].label};
                    row["product"] = prod.to_string();
                    row["zero_class"] = zero;
                    jtriples.push_back(row);
                }
        j["triples"] = jtriples;
    }
    emit(cfg, text.str(), j);
    return 0;
}

// ---------------------------------------------------------------------------
// cap: evaluate a cap product of word expressions at chain level.
// ---------------------------------------------------------------------------

int cmd_cap(const RunConfig& cfg, const std::string& cochain_expr,
            const std::string& chain_expr, int spot_check) {
    SimplicialComplex K = load_complex_file(cfg.input);
    JTuple J = parse_jtuple(cfg.jspec, K.vertex_count());
    SimplicialComplex KJ = J.all_ones() ? K : kj_construction(K, J);
    const int m = KJ.vertex_count();

    CellChain gamma;
    if (cochain_expr.find("Gamma") != std::string::npos ||
        chain_expr.find("Gamma") != std::string::npos)
        gamma = fundamental_class(KJ, cfg.cap, cfg.parallel);

    CellChain a = parse_word_expression(cochain_expr, m, WordFlavor::cochain, gamma);
    CellChain z = parse_word_expression(chain_expr, m, WordFlavor::chain, gamma);
    for (const auto& [w, c] : a.terms())
        if (!KJ.is_simplex_mask(w.sigma))
            throw input_error("cochain word " + w.to_string() +
                              " is not supported on K(J)");
    for (const auto& [w, c] : z.terms())
        if (!KJ.is_simplex_mask(w.sigma))
            throw input_error("chain word " + w.to_string() +
                              " is not supported on K(J)");

    CellChain result = word_cap(a, z, KJ);

    std::ostringstream text;
    json j;
    j["command"] = "cap";
    j["cochain"] = a.to_string();
    j["chain"] = z.to_string();
    j["result"] = result.to_string();
    text << "cochain: " << a.to_string() << "\n";
    text << "chain:   " << z.to_string() << "\n";
    text << "result:  " << result.to_string() << "\n";

    // class of the result, when it is a homogeneous cycle
    bool homogeneous = !result.zero();
    int degree = homogeneous ? result.terms().begin()->first.degree() : 0;
    for (const auto& [w, c] : result.terms())
        if (w.degree() != degree) homogeneous = false;
    if (homogeneous && boundary(result).zero()) {
        WordClasses chains(KJ, WordFlavor::chain);
        bool zero = chains.is_trivial_class(result, degree);
        text << "class:   " << (zero ? "zero" : "nonzero") << " in H_" << degree
             << "\n";
        j["class"] = zero ? "zero" : "nonzero";
        j["degree"] = degree;
    }

    if (spot_check > 0) {
        std::mt19937_64 rng(2026);
        auto words = [&](WordFlavor f) {
            std::vector<CellWord> out;
            for (int p = 0; p <= KJ.dimension() + 1; ++p)
                for (const auto& w : word_basis(KJ, p, f).words) out.push_back(w);
            return out;
        };
        auto cochains = words(WordFlavor::cochain);
        auto chains = words(WordFlavor::chain);
        int ok = 0;
        for (int t = 0; t < spot_check; ++t) {
            const auto& x = cochains[rng() % cochains.size()];
            const auto& y = chains[rng() % chains.size()];
            int r = y.degree(), p = x.degree();
            CellChain lhs = boundary(word_cap(CellChain(x), CellChain(y), KJ));
            CellChain rhs = word_cap(coboundary(CellChain(x), KJ), CellChain(y), KJ);
            rhs = ((r - p) % 2 ? -1 : 1) * rhs;
            rhs += word_cap(CellChain(x), boundary(CellChain(y)), KJ);
            if (lhs == rhs) ++ok;
        }
        text << "spot-check: " << ok << "/" << spot_check
             << " boundary identities hold\n";
        j["spot_check_passed"] = ok;
        j["spot_check_total"] = spot_check;
        if (ok != spot_check)
            throw invariant_error("cap boundary identity failed in spot-check");
    }
    emit(cfg, text.str(), j);
    return 0;
}

// ---------------------------------------------------------------------------
// manifold: render the verdict.
// ---------------------------------------------------------------------------

int cmd_manifold(const RunConfig& cfg) {
    SimplicialComplex K = load_complex_file(cfg.input);
    JTuple J = parse_jtuple(cfg.jspec, K.vertex_count());
    auto v = manifold_verdict(K, J);

    std::ostringstream text;
    json j;
    j["command"] = "manifold";
    j["homology_manifold"] = v.is_homology_manifold;
    j["generalized_homology_sphere_input"] = v.is_generalized_homology_sphere_input;
    j["dimension"] = v.dimension;
    j["status"] = to_string(v.topological_manifold_status);
    j["h1_of_K"] = group_json(v.h1_of_K);
    text << "homology manifold: " << (v.is_homology_manifold ? "yes" : "no") << "\n";
    if (v.is_homology_manifold) text << "dimension: " << v.dimension << "\n";
    text << "topological manifold: " << to_string(v.topological_manifold_status)
         << "\n";
    text << "H_1(K) = " << v.h1_of_K.to_string() << "\n";
    json jw = json::array();
    for (const auto& w : v.witnesses) {
        text << "witness: simplex " << labels_text(w.simplex) << " (" << w.reason
             << ")\n";
        json row;
        row["simplex"] = w.simplex;
        row["reason"] = w.reason;
        row["expected_sphere_dim"] = w.expected_sphere_dim;
        jw.push_back(row);
    }
    j["witnesses"] = jw;
    emit(cfg, text.str(), j);
    return 0;
}

// ---------------------------------------------------------------------------
// kj: emit K(J) in the facet file format.
// ---------------------------------------------------------------------------

int cmd_kj(const RunConfig& cfg) {
    SimplicialComplex K = load_complex_file(cfg.input);
    JTuple J = parse_jtuple(cfg.jspec, K.vertex_count());
    auto KJ = kj_construction(K, J);

    std::ostringstream header;
    header << "# K(J) on [" << J.d() << "]\n";
    for (int i = 1; i <= K.vertex_count(); ++i)
        header << "# block B_" << i << " = " << labels_text(J.block(i)) << "\n";
    std::string text = render_complex_facets(KJ, header.str());

    json j;
    j["command"] = "kj";
    j["m"] = KJ.vertex_count();
    json blocks = json::array();
    for (int i = 1; i <= K.vertex_count(); ++i) blocks.push_back(J.block(i));
    j["blocks"] = blocks;
    j["facets"] = KJ.facets();
    emit(cfg, text, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mac-kit: exact topology of real moment-angle complexes"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> triples;
    std::string cochain_expr, chain_expr;
    int spot_check = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "complex file")->required();
        sub->add_option("--J", cfg.jspec,
                        "J tuple: comma list, or one value for a constant tuple");
        sub->add_option("--format", cfg.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", cfg.cap, "subset-enumeration cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--parallel", cfg.parallel, "worker threads (0 = auto)");
    };

    auto* betti = app.add_subcommand("betti", "Betti numbers and subset table");
    add_common(betti);
    auto* ring = app.add_subcommand("ring", "representatives and product table");
    add_common(ring);
    ring->add_option("--triples", triples, "three subsets, e.g. 1,6 2,4,7 3,5")
        ->expected(3);
    auto* cap = app.add_subcommand("cap", "cap product of word expressions");
    add_common(cap);
    cap->add_option("cochain", cochain_expr, "cochain word expression")->required();
    cap->add_option("chain", chain_expr, "chain word expression (Gamma allowed)")
        ->required();
    cap->add_option("--spot-check", spot_check, "random boundary-identity checks");
    auto* manifold = app.add_subcommand("manifold", "manifold verdict for (K, J)");
    add_common(manifold);
    auto* kj = app.add_subcommand("kj", "emit K(J) in the facet format");
    add_common(kj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (betti->parsed()) return cmd_betti(cfg);
        if (ring->parsed()) return cmd_ring(cfg, triples);
        if (cap->parsed()) return cmd_cap(cfg, cochain_expr, chain_expr, spot_check);
        if (manifold->parsed()) return cmd_manifold(cfg);
        if (kj->parsed()) return cmd_kj(cfg);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
