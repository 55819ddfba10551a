#include "srforge/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace srforge {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& detail) { fail(errc::ParseError, detail); }

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty()) parse_fail(what + " is empty");
    uint64_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            parse_fail(what + " is not a number: '" + s + "'");
        v = v * 10 + static_cast<uint64_t>(ch - '0');
    }
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

Poly parse_poly(const std::string& s, uint64_t p) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) parse_fail("empty polynomial");
    Poly coeffs;
    std::size_t pos = 0;
    while (pos < t.size()) {
        int64_t sign = 1;
        if (t[pos] == '+') {
            ++pos;
        } else if (t[pos] == '-') {
            sign = -1;
            ++pos;
        }
        if (pos >= t.size()) parse_fail("dangling sign in polynomial '" + s + "'");
        std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        uint64_t coef = 1;
        bool has_digits = pos > start;
        if (has_digits) coef = parse_u64(t.substr(start, pos - start), "coefficient");
        if (pos < t.size() && t[pos] == '*') ++pos;
        unsigned exp = 0;
        if (pos < t.size() && (t[pos] == 'x' || t[pos] == 'X')) {
            ++pos;
            exp = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
                if (pos == estart) parse_fail("missing exponent in polynomial '" + s + "'");
                uint64_t e = parse_u64(t.substr(estart, pos - estart), "exponent");
                if (e > 4096) parse_fail("polynomial degree too large");
                exp = static_cast<unsigned>(e);
            }
        } else if (!has_digits) {
            parse_fail("unexpected character in polynomial '" + s + "'");
        }
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        int64_t cur = static_cast<int64_t>(coeffs[exp]);
        int64_t next = (cur + sign * static_cast<int64_t>(coef % p)) % static_cast<int64_t>(p);
        if (next < 0) next += static_cast<int64_t>(p);
        coeffs[exp] = static_cast<uint32_t>(next);
    }
    return poly_normalize(std::move(coeffs), p);
}

namespace {

std::string poly_like_to_string(const std::vector<uint32_t>& f, char var) {
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(f[i]);
            continue;
        }
        if (f[i] != 1) out += std::to_string(f[i]);
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string poly_to_string(const Poly& f) { return poly_like_to_string(f, 'x'); }

std::string elem_pretty(const FieldElem& a) {
    if (a.ctx->prime_field()) return std::to_string(a.c[0]);
    return poly_like_to_string(a.c, 'a');
}

std::string elem_file_string(const FieldElem& a) {
    if (a.ctx->prime_field()) return std::to_string(a.c[0]);
    std::string out = "[";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.c[i]);
    }
    return out + "]";
}

namespace {

int64_t parse_i64(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) parse_fail("empty number");
    try {
        std::size_t used = 0;
        int64_t v = std::stoll(t, &used);
        if (used != t.size()) parse_fail("bad number '" + t + "'");
        return v;
    } catch (const std::invalid_argument&) {
        parse_fail("bad number '" + t + "'");
    } catch (const std::out_of_range&) {
        parse_fail("number out of range '" + t + "'");
    }
}

} // namespace

FieldElem parse_elem(const std::string& token, const FieldCtxPtr& ctx) {
    if (token.empty()) parse_fail("empty matrix entry");
    if (token.front() == '[') {
        if (token.back() != ']') parse_fail("unterminated coefficient list '" + token + "'");
        std::string body = token.substr(1, token.size() - 2);
        std::vector<int64_t> vals;
        std::string cur;
        for (char ch : body) {
            if (ch == ',') {
                vals.push_back(parse_i64(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        vals.push_back(parse_i64(cur));
        if (vals.size() > ctx->n)
            parse_fail("coefficient list longer than the extension degree: '" + token + "'");
        return fe_from_coeffs_reduced(ctx, vals);
    }
    return fe_from_coeffs_reduced(ctx, {parse_i64(token)});
}

namespace {

struct Header {
    std::optional<uint64_t> p;
    std::optional<std::string> modulus;
    std::optional<std::size_t> rows, cols, block;
    std::optional<std::string> companion_poly;
};

// header lines are runs of key=value tokens (plus the bare "field" marker)
bool header_line(const std::vector<std::string>& toks, Header& h) {
    for (const std::string& tok : toks) {
        if (tok == "field") continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos) return false;
        std::string key = tok.substr(0, eq);
        if (key != "p" && key != "modulus" && key != "rows" && key != "cols" &&
            key != "block" && key != "companion")
            return false;
    }
    for (const std::string& tok : toks) {
        if (tok == "field") continue;
        auto eq = tok.find('=');
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "p") h.p = parse_u64(val, "p");
        else if (key == "modulus") h.modulus = val;
        else if (key == "rows") h.rows = parse_u64(val, "rows");
        else if (key == "cols") h.cols = parse_u64(val, "cols");
        else if (key == "block") h.block = parse_u64(val, "block");
        else if (key == "companion") h.companion_poly = val;
    }
    return true;
}

Mat compact_blocks_to_inner(const std::vector<std::string>& toks, const CompanionCtxPtr& comp,
                            std::size_t brows, std::size_t bcols) {
    unsigned n = comp->n;
    Mat inner(brows * n, bcols * n, comp->base);
    for (std::size_t idx = 0; idx < toks.size(); ++idx) {
        const std::string& tok = toks[idx];
        Mat blk(n, n, comp->base);
        if (tok == "O" || tok == "0") {
            // zero block
        } else if (tok == "I") {
            blk = mat_identity(n, comp->base);
        } else if (tok == "C") {
            blk = comp->C;
        } else if (tok.rfind("C^", 0) == 0) {
            blk = mat_pow(comp->C, parse_u64(tok.substr(2), "block exponent"));
        } else {
            parse_fail("bad block token '" + tok + "' (expected O, I, C or C^k)");
        }
        std::size_t bi = idx / bcols, bj = idx % bcols;
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) inner.set(bi * n + r, bj * n + c, blk.at(r, c));
    }
    return inner;
}

MatFile read_matrix_text(std::istream& in, uint64_t cap) {
    Header h;
    std::vector<std::string> body;
    std::string line;
    bool in_header = true;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (in_header && header_line(toks, h)) continue;
        in_header = false;
        for (auto& t : toks) body.push_back(std::move(t));
    }
    if (!h.p) parse_fail("missing field header (expected 'field p=...')");
    if (!h.rows || !h.cols) parse_fail("missing rows=/cols= header");
    std::size_t rows = *h.rows, cols = *h.cols;

    MatFile out;
    if (h.companion_poly) {
        auto comp = companion(parse_poly(*h.companion_poly, *h.p), *h.p, 1, cap);
        std::size_t bs = h.block.value_or(comp->n);
        if (bs != comp->n) parse_fail("block size differs from the companion degree");
        if (rows % bs || cols % bs) parse_fail("rows/cols are not multiples of the block size");
        std::size_t brows = rows / bs, bcols = cols / bs;
        if (body.size() != brows * bcols)
            parse_fail("expected " + std::to_string(brows * bcols) + " block tokens, got " +
                       std::to_string(body.size()));
        out.mat = compact_blocks_to_inner(body, comp, brows, bcols);
        out.block = bs;
        out.comp = comp;
        return out;
    }

    FieldCtxPtr ctx = h.modulus ? field_new(*h.p, parse_poly(*h.modulus, *h.p), cap)
                                : field_new_prime(*h.p, cap);
    if (body.size() != rows * cols)
        parse_fail("expected " + std::to_string(rows * cols) + " entries, got " +
                   std::to_string(body.size()));
    Mat m(rows, cols, ctx);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, parse_elem(body[i * cols + j], ctx));
    out.mat = std::move(m);
    out.block = h.block;
    return out;
}

FieldElem entry_from_json(const ordered_json& v, const FieldCtxPtr& ctx) {
    if (v.is_number_integer()) return fe_from_coeffs_reduced(ctx, {v.get<int64_t>()});
    if (v.is_array()) {
        std::vector<int64_t> coeffs;
        for (const auto& c : v) {
            if (!c.is_number_integer()) parse_fail("matrix entry coefficients must be integers");
            coeffs.push_back(c.get<int64_t>());
        }
        if (coeffs.size() > ctx->n) parse_fail("coefficient list longer than the extension degree");
        return fe_from_coeffs_reduced(ctx, coeffs);
    }
    parse_fail("matrix entries must be integers or coefficient arrays");
}

MatFile read_matrix_json(const std::string& text, uint64_t cap) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        parse_fail(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("field") || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        parse_fail("matrix JSON needs field, rows, cols and entries");
    const auto& jf = j["field"];
    if (!jf.is_object() || !jf.contains("p")) parse_fail("field object needs p");
    uint64_t p = jf["p"].get<uint64_t>();
    FieldCtxPtr ctx;
    if (jf.contains("modulus")) {
        Poly mod;
        if (jf["modulus"].is_string())
            mod = parse_poly(jf["modulus"].get<std::string>(), p);
        else if (jf["modulus"].is_array())
            for (const auto& c : jf["modulus"]) mod.push_back(c.get<uint32_t>());
        else
            parse_fail("modulus must be a string or coefficient array");
        ctx = field_new(p, mod, cap);
    } else {
        ctx = field_new_prime(p, cap);
    }
    std::size_t rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    if (!j["entries"].is_array() || j["entries"].size() != rows)
        parse_fail("entries must be an array of " + std::to_string(rows) + " rows");
    Mat m(rows, cols, ctx);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j["entries"][i];
        if (!row.is_array() || row.size() != cols)
            parse_fail("entry row " + std::to_string(i + 1) + " must have " +
                       std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.set(i, c, entry_from_json(row[c], ctx));
    }
    MatFile out;
    out.mat = std::move(m);
    if (j.contains("block")) out.block = j["block"].get<std::size_t>();
    if (j.contains("companion")) {
        if (ctx->n != 1) parse_fail("companion block files are over the prime field");
        out.comp = companion(parse_poly(j["companion"].get<std::string>(), p), p, 1, cap);
        if (!out.block) out.block = out.comp->n;
    }
    return out;
}

} // namespace

MatFile read_matrix(std::istream& in, uint64_t cap) {
    // sniff: JSON starts with '{'
    int ch = in.peek();
    while (ch != EOF && std::isspace(ch)) {
        in.get();
        ch = in.peek();
    }
    if (ch == '{') {
        std::ostringstream all;
        all << in.rdbuf();
        return read_matrix_json(all.str(), cap);
    }
    return read_matrix_text(in, cap);
}

MatFile read_matrix_file(const std::string& path, uint64_t cap) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open file: " + path);
    return read_matrix(in, cap);
}

namespace {

void write_entry_grid(std::ostream& out, const Mat& m) {
    std::vector<std::string> toks(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            toks[i * m.cols() + j] = elem_file_string(m.at(i, j));
            width[j] = std::max(width[j], toks[i * m.cols() + j].size());
        }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& t = toks[i * m.cols() + j];
            if (j) out << ' ';
            out << t;
            if (j + 1 < m.cols()) out << std::string(width[j] - t.size(), ' ');
        }
        out << '\n';
    }
}

void write_field_header(std::ostream& out, const FieldCtxPtr& ctx) {
    out << "field p=" << ctx->p;
    if (!ctx->prime_field()) out << " modulus=" << poly_to_string(ctx->modulus);
    out << '\n';
}

} // namespace

void write_matrix_text(std::ostream& out, const Mat& m) {
    write_field_header(out, m.ctx());
    out << "rows=" << m.rows() << " cols=" << m.cols() << '\n';
    write_entry_grid(out, m);
}

void write_blockmat_text(std::ostream& out, const BlockMat& b, bool compact) {
    // A companion= header commits the file to block-token form, so the
    // tokens must be computed before any header goes out; blocks outside
    // the companion's span drop the whole file back to plain entries.
    std::optional<std::vector<std::string>> toks;
    if (compact && b.comp && b.comp->ext->q <= b.comp->ext->dlog_cap) {
        toks.emplace(b.block_rows() * b.block_cols());
        for (std::size_t i = 0; toks && i < b.block_rows(); ++i)
            for (std::size_t j = 0; j < b.block_cols(); ++j) {
                auto f = in_span(*b.comp, b.block(i, j));
                if (!f) {
                    toks.reset();
                    break;
                }
                FieldElem e = fe_from_coeffs(b.comp->ext, *f);
                std::string tok;
                if (e.is_zero()) {
                    tok = "O";
                } else {
                    uint64_t k = dlog(e);
                    tok = k == 0 ? "I" : (k == 1 ? "C" : "C^" + std::to_string(k));
                }
                (*toks)[i * b.block_cols() + j] = std::move(tok);
            }
    }

    write_field_header(out, b.inner.ctx());
    out << "rows=" << b.inner.rows() << " cols=" << b.inner.cols() << '\n';
    out << "block=" << b.block_size << '\n';
    if (!toks) {
        write_entry_grid(out, b.inner);
        return;
    }
    out << "companion=" << poly_to_string(b.comp->poly) << '\n';
    std::size_t width = 0;
    for (const auto& t : *toks) width = std::max(width, t.size());
    for (std::size_t i = 0; i < b.block_rows(); ++i) {
        for (std::size_t j = 0; j < b.block_cols(); ++j) {
            const std::string& t = (*toks)[i * b.block_cols() + j];
            if (j) out << ' ';
            out << t;
            if (j + 1 < b.block_cols()) out << std::string(width - t.size(), ' ');
        }
        out << '\n';
    }
}

namespace {

ordered_json entries_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    bool prime = m.ctx()->prime_field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const FieldElem& e = m.at(i, j);
            if (prime) {
                row.push_back(e.c[0]);
            } else {
                ordered_json coeffs = ordered_json::array();
                for (uint32_t c : e.c) coeffs.push_back(c);
                row.push_back(std::move(coeffs));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json matrix_json_obj(const Mat& m) {
    ordered_json j;
    j["field"] = ordered_json::object();
    j["field"]["p"] = m.ctx()->p;
    if (!m.ctx()->prime_field()) j["field"]["modulus"] = poly_to_string(m.ctx()->modulus);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = entries_json(m);
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string matrix_json(const Mat& m) { return dump(matrix_json_obj(m)); }

std::string blockmat_json(const BlockMat& b) {
    ordered_json j = matrix_json_obj(b.inner);
    j["block"] = b.block_size;
    if (b.comp) j["companion"] = poly_to_string(b.comp->poly);
    return dump(j);
}

namespace {

std::string index_set_text(const IndexSet& s, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(s[i] + 1);
    }
    return out;
}

} // namespace

std::string report_text(const VerifyReport& r) {
    std::string label = r.block_size
                            ? std::to_string(*r.block_size) + "-block superregular"
                            : std::string("superregular");
    std::string out = label + ": " + (r.verdict ? "yes" : "no") + "\n";
    out += "minors checked: " + std::to_string(r.minors_checked) + "\n";
    if (r.witness_rows) {
        const char* unit = r.block_size ? "block " : "";
        out += std::string("witness ") + unit + "rows: " + index_set_text(*r.witness_rows) + "\n";
        out += std::string("witness ") + unit + "cols: " + index_set_text(*r.witness_cols) + "\n";
    }
    return out;
}

std::string report_json(const VerifyReport& r) {
    ordered_json j;
    j["schema"] = 1;
    if (r.block_size) j["block"] = *r.block_size;
    j["verdict"] = r.verdict;
    if (r.witness_rows) {
        j["witness_rows"] = *r.witness_rows;
        j["witness_cols"] = *r.witness_cols;
    } else {
        j["witness_rows"] = nullptr;
        j["witness_cols"] = nullptr;
    }
    j["minors_checked"] = r.minors_checked;
    j["index_base"] = 0;
    return dump(j);
}

std::string minor_table_text(const MinorTable& t) {
    std::vector<std::string> headers;
    headers.reserve(t.col_sets.size());
    for (const auto& c : t.col_sets) headers.push_back("cols " + index_set_text(c, ","));
    std::vector<std::string> labels;
    labels.reserve(t.row_sets.size());
    for (const auto& r : t.row_sets) labels.push_back("rows " + index_set_text(r, ","));

    std::size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (std::size_t r = 0; r < t.row_sets.size(); ++r)
            width[c] = std::max(width[c], elem_pretty(t.dets[r][c]).size());
    }

    std::string out = "minors k=" + std::to_string(t.k) + "\n";
    out += std::string(label_w, ' ');
    for (std::size_t c = 0; c < headers.size(); ++c) {
        out += "  " + headers[c];
        out += std::string(width[c] - headers[c].size(), ' ');
    }
    out += "\n";
    for (std::size_t r = 0; r < t.row_sets.size(); ++r) {
        out += labels[r] + std::string(label_w - labels[r].size(), ' ');
        for (std::size_t c = 0; c < headers.size(); ++c) {
            std::string v = elem_pretty(t.dets[r][c]);
            out += "  " + v + std::string(width[c] - v.size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

std::string minor_table_csv(const MinorTable& t) {
    std::string out = "row_set,col_set,det\n";
    for (std::size_t r = 0; r < t.row_sets.size(); ++r)
        for (std::size_t c = 0; c < t.col_sets.size(); ++c) {
            out += "\"" + index_set_text(t.row_sets[r], ",") + "\",\"" +
                   index_set_text(t.col_sets[c], ",") + "\",\"" + elem_pretty(t.dets[r][c]) +
                   "\"\n";
        }
    return out;
}

std::string minor_table_json(const MinorTable& t) {
    ordered_json j;
    j["schema"] = 1;
    j["k"] = t.k;
    j["row_sets"] = t.row_sets;
    j["col_sets"] = t.col_sets;
    ordered_json dets = ordered_json::array();
    for (const auto& line : t.dets) {
        ordered_json row = ordered_json::array();
        for (const FieldElem& e : line) {
            if (e.ctx->prime_field()) {
                row.push_back(e.c[0]);
            } else {
                ordered_json coeffs = ordered_json::array();
                for (uint32_t c : e.c) coeffs.push_back(c);
                row.push_back(std::move(coeffs));
            }
        }
        dets.push_back(std::move(row));
    }
    j["dets"] = std::move(dets);
    j["index_base"] = 0;
    return dump(j);
}

namespace {

ordered_json parse_json_object(const std::string& text, const char* what) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        parse_fail(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) parse_fail(std::string(what) + " must be a JSON object");
    return j;
}

std::size_t key_to_index(const std::string& key, const char* what) {
    if (key.empty()) parse_fail(std::string(what) + " keys must be positive integers");
    for (char ch : key)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            parse_fail(std::string(what) + " key is not an integer: '" + key + "'");
    return static_cast<std::size_t>(parse_u64(key, what));
}

uint32_t coeff_value(const ordered_json& v) {
    if (!v.is_number_integer()) parse_fail("coefficients must be integers");
    int64_t x = v.get<int64_t>();
    if (x < 0) fail(errc::BadCoefficientRange, "coefficient not in [0, p)");
    if (x > UINT32_MAX) fail(errc::BadCoefficientRange, "coefficient not in [0, p)");
    return static_cast<uint32_t>(x);
}

} // namespace

PerturbSpecRow parse_perturb_row_spec(const std::string& json_text) {
    ordered_json j = parse_json_object(json_text, "row spec");
    for (const auto& [key, _] : j.items())
        if (key != "row" && key != "coeffs") parse_fail("unknown row spec key '" + key + "'");
    if (!j.contains("row") || !j["row"].is_number_integer())
        parse_fail("row spec needs an integer 'row'");
    PerturbSpecRow spec;
    int64_t row = j["row"].get<int64_t>();
    if (row < 1) parse_fail("'row' must be positive (1-based)");
    spec.row = static_cast<std::size_t>(row);
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object()) parse_fail("'coeffs' must be an object");
        for (const auto& [lkey, powers] : j["coeffs"].items()) {
            std::size_t l = key_to_index(lkey, "column");
            if (!powers.is_object()) parse_fail("coefficient entries must be objects");
            for (const auto& [ikey, val] : powers.items()) {
                std::size_t i = key_to_index(ikey, "alpha power");
                spec.coeffs[l][i] = coeff_value(val);
            }
        }
    }
    return spec;
}

PerturbSpecBlock parse_perturb_block_spec(const std::string& json_text) {
    ordered_json j = parse_json_object(json_text, "block spec");
    for (const auto& [key, _] : j.items())
        if (key != "t" && key != "rows" && key != "table" && key != "omega")
            parse_fail("unknown block spec key '" + key + "'");
    if (!j.contains("t") || !j["t"].is_number_integer())
        parse_fail("block spec needs an integer 't'");
    if (!j.contains("rows") || !j["rows"].is_number_integer())
        parse_fail("block spec needs an integer 'rows'");
    if (!j.contains("table") || !j["table"].is_array())
        parse_fail("block spec needs a 'table' array");
    PerturbSpecBlock spec;
    int64_t t = j["t"].get<int64_t>();
    int64_t rows = j["rows"].get<int64_t>();
    if (t < 0) parse_fail("'t' must be nonnegative");
    if (rows < 1) parse_fail("'rows' must be positive");
    spec.t = static_cast<uint64_t>(t);
    spec.rows = static_cast<std::size_t>(rows);
    for (const auto& line : j["table"]) {
        if (!line.is_array()) parse_fail("'table' must be an array of arrays");
        std::vector<uint32_t> row;
        for (const auto& v : line) row.push_back(coeff_value(v));
        spec.table.push_back(std::move(row));
    }
    if (j.contains("omega")) {
        if (!j["omega"].is_array()) parse_fail("'omega' must be an array");
        for (const auto& v : j["omega"]) {
            if (!v.is_number_integer() || v.get<int64_t>() < 1)
                parse_fail("'omega' entries must be positive (1-based)");
            spec.omega.push_back(v.get<std::size_t>());
        }
    }
    return spec;
}

} // namespace srforge
