#pragma once

#include <iosfwd>
#include <string>

#include "srforge/construct.hpp"

namespace srforge {

/// "x^3+3x+3" -> coefficient vector, reduced mod p.
Poly parse_poly(const std::string& s, uint64_t p);
/// Highest power first, 'x' as the variable: "x^3+3x+3".
std::string poly_to_string(const Poly& f);

/// Human form: decimal over prime fields, "2a^2+3a+1" over extensions.
std::string elem_pretty(const FieldElem& a);
/// File form: decimal over prime fields, "[c0,c1,c2]" over extensions.
std::string elem_file_string(const FieldElem& a);
/// Accepts both file forms in any field (bare integers embed as scalars).
FieldElem parse_elem(const std::string& token, const FieldCtxPtr& ctx);

/// Result of reading a matrix file: the matrix, an optional declared
/// block size, and an optional companion context (compact block files).
struct MatFile {
    Mat mat;
    std::optional<std::size_t> block;
    CompanionCtxPtr comp;

    bool is_block() const { return block.has_value(); }
    BlockMat as_block() const { return block_mat(mat, *block, comp); }
};

/// Reads text or JSON (sniffed on the first character).
MatFile read_matrix(std::istream& in, uint64_t dlog_cap = kDefaultDlogCap);
MatFile read_matrix_file(const std::string& path, uint64_t dlog_cap = kDefaultDlogCap);

void write_matrix_text(std::ostream& out, const Mat& m);
/// compact renders C-power blocks ("C^k"/"O") when comp is attached and
/// the extension fits the dlog cap; otherwise falls back to entries.
void write_blockmat_text(std::ostream& out, const BlockMat& b, bool compact = false);

std::string matrix_json(const Mat& m);
std::string blockmat_json(const BlockMat& b);

std::string report_text(const VerifyReport& r);
std::string report_json(const VerifyReport& r);

std::string minor_table_text(const MinorTable& t);
std::string minor_table_csv(const MinorTable& t);
std::string minor_table_json(const MinorTable& t);

/// {"row": 1, "coeffs": {"1": {"2": 3}, ...}}
PerturbSpecRow parse_perturb_row_spec(const std::string& json_text);
/// {"t": 2, "rows": 2, "table": [[...]], "omega": [2,1,3]}
PerturbSpecBlock parse_perturb_block_spec(const std::string& json_text);

} // namespace srforge
