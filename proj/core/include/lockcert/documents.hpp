#pragma once

// JSON documents exchanged by the command-line tools. Every document carries
// "schema_version": 1. Doubles are written with 17 significant digits and
// fields in a fixed order, so equal inputs give byte-identical files.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lockcert/chain.hpp"
#include "lockcert/lemma.hpp"
#include "lockcert/radial.hpp"

namespace lockcert {

inline constexpr int kSchemaVersion = 1;

struct ChainSpecDocument {
  CornerChain chain;
  std::optional<double> tol;
};

// Throws ParseError (with line number or field path) or ValidationError.
ChainSpecDocument parse_chain_spec(std::string_view text);
std::string serialize_chain_spec(const ChainSpecDocument& doc);

// Profile document: {"schema_version", "n", "start"?: {"s","f"}, "pieces": [...]}
// with pieces {"kind": "cap", "s_end"}, {"kind": "linear", "slope", "s_end" | "f_end"}
// (no end on the last piece) and {"kind": "schwarzschild", "mass" | "slope"}.
RadialProfile parse_profile_spec(std::string_view text);

// Lemma document: {"schema_version", "kind": "lemma", "h_low_minus", "h_bar_plus",
// "a", "samples": [[H-, H+], ...]}. Only the oracle consumes it.
LemmaInput parse_lemma_spec(std::string_view text);

// True when the document's "kind" is "lemma".
bool is_lemma_document(std::string_view text);

std::string serialize_certificate(const LockCertificate& cert);
LockCertificate parse_certificate(std::string_view text);

std::string format_double(double value);

std::string read_file(const std::filesystem::path& path);
// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace lockcert
