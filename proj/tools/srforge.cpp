// srforge: construct and verify superregular matrices over finite fields.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srforge/companion.hpp"
#include "srforge/construct.hpp"
#include "srforge/examples.hpp"
#include "srforge/field.hpp"
#include "srforge/io.hpp"
#include "srforge/linalg.hpp"
#include "srforge/verify.hpp"

namespace {

using namespace srforge;

struct Global {
    unsigned jobs = 1;
    std::string out = "text";
    bool exhaustive = false;
    bool unchecked = false;

    VerifyOptions vopts() const { return {exhaustive, jobs}; }
};

unsigned jobs_from_env() {
    const char* s = std::getenv("SRFORGE_JOBS");
    if (!s) return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end == s || *end != '\0' || v == 0 || v > 1024) return 1;
    return static_cast<unsigned>(v);
}

MatFile load(const std::string& path) {
    if (path == "-") return read_matrix(std::cin);
    return read_matrix_file(path);
}

// --spec takes inline JSON or @path
std::string load_spec(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) fail(errc::ParseError, "cannot open spec file '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

[[noreturn]] void no_csv(const std::string& what) {
    fail(errc::ParseError, "csv output is only available for minors, not " + what);
}

int emit_matrix(const Global& g, const Mat& m) {
    if (g.out == "json")
        std::cout << matrix_json(m);
    else if (g.out == "csv")
        no_csv("matrices");
    else
        write_matrix_text(std::cout, m);
    return 0;
}

int emit_block(const Global& g, const BlockMat& b, bool compact) {
    if (g.out == "json")
        std::cout << blockmat_json(b);
    else if (g.out == "csv")
        no_csv("block matrices");
    else
        write_blockmat_text(std::cout, b, compact);
    return 0;
}

int emit_report(const Global& g, const VerifyReport& rep) {
    if (g.out == "json")
        std::cout << report_json(rep);
    else if (g.out == "csv")
        no_csv("verification reports");
    else
        std::cout << report_text(rep);
    return rep.verdict ? 0 : 1;
}

Poly require_poly(const std::string& text, uint64_t p) {
    if (text.empty()) fail(errc::ParseError, "--poly must not be empty");
    return parse_poly(text, p);
}

// block size for `verify block`: explicit --b wins, else the file's own header
std::size_t pick_block(const MatFile& mf, std::size_t b_opt) {
    if (b_opt) return b_opt;
    if (mf.block) return *mf.block;
    fail(errc::ParseError, "no block size: pass --b or use a file with a block= header");
}

int run_corpus(const Global& g, const std::string& id, bool all) {
    if (all) {
        int fails = 0;
        for (const auto& out : run_all_examples(g.vopts())) {
            std::cout << out.id << ": " << (out.pass ? "PASS" : "FAIL") << "\n";
            if (!out.detail.empty()) std::cout << out.detail;
            if (!out.pass) ++fails;
        }
        std::cout << (fails ? "corpus: FAIL\n" : "corpus: PASS\n");
        return fails ? 1 : 0;
    }
    ExampleOutcome out = run_example(id, g.vopts(), &std::cout);
    if (!out.detail.empty()) std::cout << out.detail;
    std::cout << out.id << ": " << (out.pass ? "PASS" : "FAIL") << "\n";
    return out.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify superregular (MDS) matrices over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    g.jobs = jobs_from_env();
    app.add_option("--jobs", g.jobs, "worker threads for verification")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", g.out, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--exhaustive", g.exhaustive,
                 "enumerate every minor instead of stopping at the first singular one");
    app.add_flag("--unchecked", g.unchecked, "skip superregularity checks on construction inputs");

    int rc = 0;

    // verify sr|block
    auto* verify = app.add_subcommand("verify", "check (block) superregularity of a matrix file");
    verify->require_subcommand(1);
    static std::string v_file;
    auto* vsr = verify->add_subcommand("sr", "every square submatrix must be nonsingular");
    vsr->add_option("file", v_file, "matrix file, or - for stdin")->required();
    vsr->callback([&] { rc = emit_report(g, is_superregular(load(v_file).mat, g.vopts())); });
    static std::size_t v_b = 0;
    auto* vblk = verify->add_subcommand("block", "every full-block square submatrix must be nonsingular");
    vblk->add_option("--b", v_b, "block size");
    vblk->add_option("file", v_file, "matrix file, or - for stdin")->required();
    vblk->callback([&] {
        MatFile mf = load(v_file);
        rc = emit_report(g, is_block_superregular(block_mat(mf.mat, pick_block(mf, v_b)), g.vopts()));
    });

    // minors
    static std::string mn_file;
    static std::size_t mn_k = 0;
    auto* minors = app.add_subcommand("minors", "emit the table of all k x k minors");
    minors->add_option("--k", mn_k, "minor size")->required();
    minors->add_option("file", mn_file, "matrix file, or - for stdin")->required();
    minors->callback([&] {
        MinorTable t = minor_table(load(mn_file).mat, mn_k);
        if (g.out == "json")
            std::cout << minor_table_json(t);
        else if (g.out == "csv")
            std::cout << minor_table_csv(t);
        else
            std::cout << minor_table_text(t);
    });

    // kron
    static std::vector<std::string> kr_files;
    auto* kr = app.add_subcommand("kron", "Kronecker product of two square superregular matrices");
    kr->add_option("files", kr_files, "files A B")->required()->expected(2);
    kr->callback([&] {
        rc = emit_block(g, kron_block(load(kr_files[0]).mat, load(kr_files[1]).mat, g.vopts(),
                                      g.unchecked),
                        false);
    });

    // chain
    static std::vector<std::string> ch_files;
    static std::string ch_with;
    auto* ch = app.add_subcommand("chain", "iterated Kronecker product A1 (x) ... (x) Ak (x) B");
    ch->add_option("factors", ch_files, "files A1 A2 ...")->required()->expected(-1);
    ch->add_option("--with", ch_with, "file B, the rightmost factor")->required();
    ch->callback([&] {
        std::vector<Mat> as;
        for (const auto& f : ch_files) as.push_back(load(f).mat);
        rc = emit_block(g, chain(as, load(ch_with).mat, g.vopts(), g.unchecked), false);
    });

    // scaled
    static std::string sc_a, sc_b;
    static std::vector<std::string> sc_bs;
    auto* sc = app.add_subcommand("scaled", "blockwise product with per-column scaling factors");
    sc->add_option("file", sc_a, "file A")->required();
    sc->add_option("--b", sc_b, "file B")->required();
    sc->add_option("--bs", sc_bs, "files B1,B2,... (one per column of A)")
        ->required()
        ->delimiter(',');
    sc->callback([&] {
        std::vector<Mat> bs;
        for (const auto& f : sc_bs) bs.push_back(load(f).mat);
        rc = emit_block(g, scaled_columns(load(sc_a).mat, load(sc_b).mat, bs, g.vopts(), g.unchecked),
                        false);
    });

    // companion
    static uint64_t co_p = 0;
    static std::string co_poly;
    auto* co = app.add_subcommand("companion", "companion matrix of a primitive polynomial");
    co->add_option("--p", co_p, "field characteristic")->required();
    co->add_option("--poly", co_poly, "monic primitive polynomial, e.g. 'x^3+3x+3'")->required();
    co->callback([&] { rc = emit_matrix(g, companion(require_poly(co_poly, co_p), co_p)->C); });

    // primitive
    static uint64_t pr_p = 0;
    static std::size_t pr_deg = 0;
    static bool pr_list = false;
    auto* pr = app.add_subcommand("primitive", "find primitive polynomials of a given degree");
    pr->add_option("--p", pr_p, "field characteristic")->required();
    pr->add_option("--degree", pr_deg, "polynomial degree")->required();
    pr->add_flag("--list", pr_list, "list every primitive polynomial instead of the first");
    pr->callback([&] {
        if (pr_deg == 0) fail(errc::ParseError, "--degree must be positive");
        if (pr_p < 2) fail(errc::NonPrimeP, std::to_string(pr_p) + " is not a prime");
        std::vector<std::string> found;
        // monic candidates in base-p counter order over the low coefficients
        std::vector<uint32_t> f(pr_deg + 1, 0);
        f[pr_deg] = 1;
        uint64_t total = 1;
        for (std::size_t i = 0; i < pr_deg; ++i) {
            if (total > (uint64_t(1) << 24) / pr_p)
                fail(errc::FieldTooLarge, "degree too large to enumerate");
            total *= pr_p;
        }
        for (uint64_t key = 0; key < total; ++key) {
            uint64_t k = key;
            for (std::size_t i = 0; i < pr_deg; ++i) {
                f[i] = static_cast<uint32_t>(k % pr_p);
                k /= pr_p;
            }
            if (!is_primitive(f, pr_p)) continue;
            found.push_back(poly_to_string(f));
            if (!pr_list) break;
        }
        if (g.out == "json") {
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["p"] = pr_p;
            j["degree"] = pr_deg;
            j["primitive"] = found;
            std::cout << j.dump(2) << "\n";
        } else if (g.out == "csv") {
            no_csv("polynomial listings");
        } else {
            for (const auto& s : found) std::cout << s << "\n";
        }
        rc = found.empty() ? 1 : 0;
    });

    // lift
    static std::vector<std::string> lf_files;
    static uint64_t lf_p = 0, lf_texp_val = 1;
    static std::string lf_poly;
    auto* lf = app.add_subcommand(
        "lift", "build the extension-field matrix alpha^t (A1 (x) ... (x) Ak) from prime-field factors");
    lf->add_option("factors", lf_files, "files A1 A2 ...")->required()->expected(-1);
    lf->add_option("--p", lf_p, "field characteristic")->required();
    lf->add_option("--poly", lf_poly, "monic primitive polynomial")->required();
    auto* lf_texp = lf->add_option("--texp", lf_texp_val, "exponent t (default: 1)");
    lf->callback([&] {
        auto comp = companion(require_poly(lf_poly, lf_p), lf_p);
        std::vector<Mat> as;
        for (const auto& f : lf_files) as.push_back(load(f).mat);
        std::optional<uint64_t> texp;
        if (lf_texp->count()) texp = lf_texp_val;
        rc = emit_matrix(g, lift(as, comp, texp, g.vopts(), g.unchecked));
    });

    // embed
    static std::string em_file, em_poly;
    static uint64_t em_p = 0;
    auto* em = app.add_subcommand("embed",
                                  "map an extension-field matrix to its prime-field block image");
    em->add_option("file", em_file, "matrix file over GF(p^n), or - for stdin")->required();
    em->add_option("--p", em_p, "field characteristic")->required();
    em->add_option("--poly", em_poly, "monic primitive polynomial defining the field")->required();
    em->callback([&] {
        auto comp = companion(require_poly(em_poly, em_p), em_p);
        Mat m = load(em_file).mat;
        if (!ctx_same(m.ctx(), comp->ext))
            fail(errc::ContextMismatch, "matrix field does not match --p/--poly");
        rc = emit_block(g, Psi(comp, m), true);
    });

    // frobenius
    static std::string fr_file;
    static std::size_t fr_j = 0;
    auto* fr = app.add_subcommand("frobenius", "apply x -> x^(p^j) entrywise");
    fr->add_option("--j", fr_j, "Frobenius power")->required();
    fr->add_option("file", fr_file, "matrix file, or - for stdin")->required();
    fr->callback([&] { rc = emit_matrix(g, mat_frobenius(load(fr_file).mat, fr_j)); });

    // perturb-row
    static std::string prow_file, prow_spec;
    auto* prow = app.add_subcommand("perturb-row",
                                    "add extension-field terms to one row of a lifted matrix");
    prow->add_option("file", prow_file, "base matrix alpha*A over GF(p^n), or - for stdin")->required();
    prow->add_option("--spec", prow_spec, "JSON spec, inline or @path")->required();
    prow->callback([&] {
        Mat m = load(prow_file).mat;
        if (m.ctx()->prime_field())
            fail(errc::ContextMismatch, "perturb-row needs a matrix over an extension field");
        auto comp = companion(m.ctx()->modulus, m.ctx()->p);
        rc = emit_matrix(g, perturb_row(m, comp, parse_perturb_row_spec(load_spec(prow_spec)),
                                        g.vopts(), g.unchecked));
    });

    // perturb-block
    static std::string pblk_file, pblk_spec;
    static bool pblk_allow_j1 = false;
    auto* pblk = app.add_subcommand(
        "perturb-block", "add a coefficient table to the leading rows and permute them");
    pblk->add_option("file", pblk_file, "base matrix alpha*A over GF(p^n), or - for stdin")->required();
    pblk->add_option("--spec", pblk_spec, "JSON spec, inline or @path")->required();
    pblk->add_flag("--allow-j1", pblk_allow_j1,
                   "permit a single perturbed row; the result is then verified exhaustively");
    pblk->callback([&] {
        Mat m = load(pblk_file).mat;
        if (m.ctx()->prime_field())
            fail(errc::ContextMismatch, "perturb-block needs a matrix over an extension field");
        auto comp = companion(m.ctx()->modulus, m.ctx()->p);
        Mat n = perturb_block(m, comp, parse_perturb_block_spec(load_spec(pblk_spec)), g.vopts(),
                              g.unchecked, pblk_allow_j1);
        rc = emit_matrix(g, n);
        if (pblk_allow_j1) {
            VerifyOptions ex = g.vopts();
            ex.exhaustive = true;
            VerifyReport rep = is_superregular(n, ex);
            if (!rep.verdict) {
                std::cerr << "warning: the perturbed matrix is not superregular\n"
                          << report_text(rep);
                rc = 1;
            }
        }
    });

    // search
    static uint64_t se_p = 0, se_seed = 0, se_tries = 0;
    static std::size_t se_rows = 0, se_cols = 0;
    static std::string se_poly;
    auto* se = app.add_subcommand("search", "seeded random search for a superregular matrix");
    se->add_option("--p", se_p, "field characteristic")->required();
    se->add_option("--poly", se_poly, "monic irreducible modulus for an extension field");
    se->add_option("--rows", se_rows, "matrix rows")->required();
    se->add_option("--cols", se_cols, "matrix columns")->required();
    se->add_option("--tries", se_tries, "number of candidates to draw")->required();
    se->add_option("--seed", se_seed, "RNG seed")->required();
    se->callback([&] {
        FieldCtxPtr ctx =
            se_poly.empty() ? field_new_prime(se_p) : field_new(se_p, parse_poly(se_poly, se_p));
        SearchResult res = random_search(ctx, se_rows, se_cols, se_tries, se_seed, g.vopts());
        if (g.out == "json") {
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["found"] = res.found.has_value();
            j["seed"] = res.seed;
            j["tries_used"] = res.tries_used;
            if (res.found) j["matrix"] = nlohmann::ordered_json::parse(matrix_json(*res.found));
            std::cout << j.dump(2) << "\n";
        } else if (g.out == "csv") {
            no_csv("search results");
        } else if (res.found) {
            std::cout << "found a superregular " << se_rows << "x" << se_cols << " matrix after "
                      << res.tries_used << " tries (seed " << res.seed << ")\n";
            write_matrix_text(std::cout, *res.found);
        } else {
            std::cout << "no superregular matrix found in " << res.tries_used << " tries (seed "
                      << res.seed << ")\n";
        }
        rc = res.found ? 0 : 1;
    });

    // paper-example
    static std::string pe_id;
    static bool pe_all = false;
    auto* pe = app.add_subcommand("paper-example",
                                  "replay an embedded example from the source paper");
    pe->add_option("id", pe_id, "case id, e.g. ex3.10 or tableA2");
    pe->add_flag("--all", pe_all, "run the whole corpus");
    pe->callback([&] {
        if (pe_all == !pe_id.empty())
            fail(errc::ParseError, "pass exactly one of an example id or --all");
        rc = run_corpus(g, pe_id, pe_all);
    });

    // let --jobs/--out/--exhaustive/--unchecked appear after the subcommand too
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands([](CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
