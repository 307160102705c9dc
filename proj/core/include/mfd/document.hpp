#pragma once

#include "mfd/frobenius.hpp"
#include "mfd/mf.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mfd {

struct DocParseError : std::runtime_error {
  DocParseError(std::string msg, std::size_t line, std::size_t col)
      : std::runtime_error(std::move(msg)), line(line), col(col) {}
  std::size_t line, col;  // 1-based; best effort for nested entries
};

/// On-disk description of a matrix factorization: field descriptor, variable
/// list, f, sizes and the factor entries as polynomial strings (row-major).
/// Canonical printing is deterministic and round-trips through parse().
struct MFDocument {
  std::string name;  // empty when absent
  FieldKind field_kind = FieldKind::rational_exact;
  std::int64_t p = 0;
  std::vector<std::string> vars;
  std::string f_text;
  int d = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::vector<std::string>>> factors;
  std::string metadata_json;  // canonical JSON object text, empty when absent

  static MFDocument parse(const std::string& text);
  static MFDocument from_mf(const MatrixFactorization& x, std::string name);

  std::string print() const;
  Field field() const;
  RingPtr ring() const;
  MatrixFactorization to_mf() const;
};

/// Morphism between two embedded documents, components row-major.
struct MorphismDocument {
  MFDocument source, target;
  std::vector<std::vector<std::vector<std::string>>> components;

  static MorphismDocument parse(const std::string& text);
  static MorphismDocument from_morphism(const Morphism& alpha);
  std::string print() const;
  Morphism to_morphism() const;
};

/// A morphism document plus the null-homotopy witness s_1..s_d.
struct HomotopyDocument {
  MorphismDocument morphism;
  std::vector<std::vector<std::vector<std::string>>> maps;

  static HomotopyDocument parse(const std::string& text);
  std::string print() const;
  Homotopy to_homotopy() const;
};

std::string content_digest(const std::string& text);  // fnv1a over the canonical text

/// Deterministic JSON certificate: command, input digests, seed/trials/mode,
/// verdicts and numeric evidence. Re-running with the same inputs and seed
/// reproduces the bytes.
class Certificate {
 public:
  Certificate(std::string command, std::uint64_t seed, unsigned trials, std::string mode);
  Certificate(const Certificate&);
  Certificate& operator=(const Certificate&);
  ~Certificate();

  void input(const std::string& name, const std::string& canonical_text);
  void roots(std::int64_t p, std::int64_t omega, std::int64_t mu);
  void verdict(const std::string& key, bool value);
  void verdicts(const std::string& key, const std::vector<bool>& values);
  void evidence_int(const std::string& key, long long value);
  void evidence_ints(const std::string& key, const std::vector<long long>& values);
  void evidence_str(const std::string& key, const std::string& value);
  void evidence_json(const std::string& key, const std::string& raw_json);
  void result_document(const std::string& raw_json);

  bool all_verdicts_hold() const;
  std::string str() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mfd
