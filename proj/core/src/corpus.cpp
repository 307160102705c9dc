#include "mfd/corpus.hpp"

#include <stdexcept>

namespace mfd {

namespace {

using Grid = std::vector<std::vector<std::string>>;

MFDocument make_doc(std::string name, FieldKind kind, std::int64_t p,
                    std::vector<std::string> vars, std::string f, int d, std::size_t n,
                    std::vector<Grid> factors, std::string metadata) {
  MFDocument doc;
  doc.name = std::move(name);
  doc.field_kind = kind;
  doc.p = p;
  doc.vars = std::move(vars);
  doc.f_text = std::move(f);
  doc.d = d;
  doc.n = n;
  doc.factors = std::move(factors);
  doc.metadata_json = std::move(metadata);
  return doc;
}

std::vector<CorpusItem> build_corpus() {
  std::vector<CorpusItem> items;

  {
    CorpusItem item;
    item.name = "dinfty";
    item.doc = make_doc(
        "dinfty", FieldKind::rational_exact, 0, {"x", "y"}, "x^2*y", 3, 2,
        {Grid{{"x", "y"}, {"0", "-x"}}, Grid{{"0", "y"}, {"x^2", "-x"}},
         Grid{{"1", "0"}, {"x", "y"}}},
        R"({"note":"D-infinity curve, not reduced","reduced":false,"syzygy_multiplicities":[0,0,1],"stable_size":3})");
    item.expect_reduced = false;
    item.expect_syzygy_mult = std::vector<int>{0, 0, 1};
    item.expect_stable_size = 3;
    items.push_back(std::move(item));
  }

  {
    CorpusItem item;
    item.name = "linear3";
    item.doc = make_doc("linear3", FieldKind::rational_exact, 0, {"x", "y"},
                        "x^2*y + x*y^2", 3, 1,
                        {Grid{{"x"}}, Grid{{"y"}}, Grid{{"x + y"}}},
                        R"({"note":"three linear factors of x*y*(x+y)","reduced":true,"syzygy_multiplicities":[0,0,0],"stable_size":2})");
    item.expect_reduced = true;
    item.expect_syzygy_mult = std::vector<int>{0, 0, 0};
    item.expect_stable_size = 2;
    items.push_back(std::move(item));
  }

  {
    CorpusItem item;
    item.name = "e6";
    item.doc = make_doc(
        "e6", FieldKind::prime_field, 7, {"x", "y"}, "x^3 + y^4", 3, 3,
        {Grid{{"y", "0", "x"}, {"x", "-y^2", "0"}, {"0", "x", "-y"}},
         Grid{{"-y^2", "0", "2*x"}, {"2*x", "-y", "0"}, {"0", "2*x", "y"}},
         Grid{{"-y", "0", "4*x"}, {"4*x", "y", "0"}, {"0", "4*x", "-y^2"}}},
        R"({"note":"E6 curve x^3+y^4 over F_7, omega = 2","reduced":true})");
    item.expect_reduced = true;
    items.push_back(std::move(item));
  }

  {
    CorpusItem item;
    item.name = "e7";
    item.doc = make_doc(
        "e7", FieldKind::prime_field, 7, {"x", "y"}, "x^3 + x*y^3", 3, 3,
        {Grid{{"y", "0", "x"}, {"-x", "x*y", "0"}, {"0", "-x", "y"}},
         Grid{{"x*y", "0", "2*x"}, {"-2*x", "y", "0"}, {"0", "-2*x", "y"}},
         Grid{{"y", "0", "4*x"}, {"-4*x", "y", "0"}, {"0", "-4*x", "x*y"}}},
        R"({"note":"E7 curve x^3+x*y^3 over F_7, omega = 2","reduced":true})");
    item.expect_reduced = true;
    items.push_back(std::move(item));
  }

  {
    CorpusItem item;
    item.name = "e8a";
    item.doc = make_doc(
        "e8a", FieldKind::prime_field, 7, {"x", "y"}, "x^3 + y^5", 3, 3,
        {Grid{{"y", "-x", "0"}, {"0", "y", "-x"}, {"x", "0", "y^3"}},
         Grid{{"y^3", "-2*x", "0"}, {"0", "y", "-2*x"}, {"2*x", "0", "y"}},
         Grid{{"y", "-4*x", "0"}, {"0", "y^3", "-4*x"}, {"4*x", "0", "y"}}},
        R"({"note":"E8 curve x^3+y^5 over F_7, first triple, omega = 2","reduced":true})");
    item.expect_reduced = true;
    items.push_back(std::move(item));
  }

  {
    CorpusItem item;
    item.name = "e8b";
    item.doc = make_doc(
        "e8b", FieldKind::prime_field, 7, {"x", "y"}, "x^3 + y^5", 3, 3,
        {Grid{{"y", "-x", "0"}, {"0", "y^2", "-x"}, {"x", "0", "y^2"}},
         Grid{{"y^2", "-2*x", "0"}, {"0", "y", "-2*x"}, {"2*x", "0", "y^2"}},
         Grid{{"y^2", "-4*x", "0"}, {"0", "y^2", "-4*x"}, {"4*x", "0", "y"}}},
        R"({"note":"E8 curve x^3+y^5 over F_7, second triple, omega = 2","reduced":true})");
    item.expect_reduced = true;
    items.push_back(std::move(item));
  }

  {
    CorpusItem item;
    item.name = "d2xy";
    item.doc = make_doc("d2xy", FieldKind::rational_exact, 0, {"x", "y"}, "x*y", 2, 1,
                        {Grid{{"x"}}, Grid{{"y"}}},
                        R"({"note":"two-factor pair (x, y)","reduced":true})");
    item.expect_reduced = true;
    item.expect_syzygy_mult = std::vector<int>{0, 0};
    item.expect_stable_size = 1;
    items.push_back(std::move(item));
  }

  return items;
}

}  // namespace

const std::vector<CorpusItem>& corpus() {
  static const std::vector<CorpusItem> items = build_corpus();
  return items;
}

const CorpusItem& corpus_item(const std::string& name) {
  for (const auto& item : corpus()) {
    if (item.name == name) return item;
  }
  throw std::out_of_range("no corpus item named '" + name + "'");
}

}  // namespace mfd
