#include <cstdlib>

#include "dmm/lang.hpp"

namespace dmm {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  std::vector<Statement> program() {
    std::vector<Statement> out;
    while (!at(Token::Kind::eof)) {
      out.push_back(statement());
    }
    return out;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t i_ = 0;

  const Token& cur() const { return toks_[i_]; }
  bool at(Token::Kind k) const { return cur().kind == k; }
  bool at_punct(const char* p) const {
    return cur().kind == Token::Kind::punct && cur().text == p;
  }
  bool at_keyword(const char* k) const {
    return cur().kind == Token::Kind::keyword && cur().text == k;
  }
  const Token& take() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = cur().kind == Token::Kind::eof
                          ? "end of input"
                          : "'" + (cur().kind == Token::Kind::keyword
                                       ? "#" + cur().text
                                       : cur().text) +
                                "'";
    Error e(ErrorCode::parse_error, "expected " + expected + ", got " + got,
            cur().pos);
    e.incomplete_input = cur().kind == Token::Kind::eof;
    throw e;
  }

  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(std::string("'") + p + "'");
    take();
  }

  Name name() {
    if (!at(Token::Kind::name) &&
        !(at(Token::Kind::number) && cur().text.find_first_not_of(
                                         "0123456789") == std::string::npos)) {
      fail("a name");
    }
    return Name(take().text);
  }

  std::string ident() {
    if (!at(Token::Kind::name)) fail("an identifier");
    return take().text;
  }

  double signed_number() {
    double sign = 1.0;
    if (at_punct("-")) {
      take();
      sign = -1.0;
    } else if (at_punct("+")) {
      take();
    }
    if (!at(Token::Kind::number)) fail("a number");
    return sign * take().number;
  }

  std::uint64_t unsigned_integer(const char* what) {
    if (!at(Token::Kind::number)) fail(what);
    const Token& t = take();
    if (t.text.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::parse_error,
                  std::string("expected ") + what + ", got '" + t.text + "'",
                  t.pos);
    }
    return std::strtoull(t.text.c_str(), nullptr, 10);
  }

  // name | name:cell:field
  PortRef port_ref() {
    SourcePos pos = cur().pos;
    Name first = name();
    if (!at_punct(":")) {
      return IdentRef{first.text(), pos};
    }
    take();
    Name cell = name();
    expect_punct(":");
    Name field = name();
    return PortRef3{std::move(first), std::move(cell), std::move(field), pos};
  }

  // [coef '*'] ref, coef = number | (signed number)
  MaskTerm mask_term() {
    MaskTerm t;
    if (at(Token::Kind::number) || at_punct("(") || at_punct("-")) {
      if (at_punct("(")) {
        take();
        t.coef = signed_number();
        expect_punct(")");
      } else {
        t.coef = signed_number();
      }
      expect_punct("*");
    }
    t.ref = port_ref();
    return t;
  }

  MaskExpr mask_expr() {
    MaskExpr e;
    e.push_back(mask_term());
    while (at_punct("+")) {
      take();
      e.push_back(mask_term());
    }
    return e;
  }

  std::vector<BindingItem> bindings() {
    std::vector<BindingItem> out;
    out.push_back(binding());
    while (at_punct(",")) {
      take();
      out.push_back(binding());
    }
    return out;
  }

  BindingItem binding() {
    Name field = name();
    expect_punct(":");
    return {std::move(field), ident()};
  }

  Statement statement() {
    if (!at(Token::Kind::keyword)) fail("a statement keyword");
    SourcePos pos = cur().pos;
    std::string kw = take().text;
    StatementNode node = [&]() -> StatementNode {
      if (kw == "kind") return kind_decl();
      if (kw == "newcelltype") return new_cell_type();
      if (kw == "neuron") return neuron();
      if (kw == "stream") return stream_decl();
      if (kw == "weight") return weight();
      if (kw == "updateweights") return update_weights();
      if (kw == "step") return StepStmt{unsigned_integer("a step count")};
      if (kw == "seed") return SeedStmt{unsigned_integer("a seed")};
      if (kw == "gc") return GcStmt{};
      if (kw == "show") return show();
      throw Error(ErrorCode::parse_error, "unknown keyword '#" + kw + "'",
                  pos);
    }();
    expect_punct(";");
    return Statement{std::move(node), pos};
  }

  KindDeclStmt kind_decl() {
    KindDeclStmt s;
    s.names.push_back(name());
    while (at_punct(",")) {
      take();
      s.names.push_back(name());
    }
    return s;
  }

  NewCellTypeStmt new_cell_type() {
    NewCellTypeStmt s{name(), {}, {}};
    while (at_keyword("input")) {
      take();
      Name kind = name();
      expect_punct(":");
      s.inputs.push_back({name(), std::move(kind)});
    }
    while (at_keyword("output")) {
      take();
      Name kind = name();
      expect_punct(":");
      s.outputs.push_back({name(), std::move(kind)});
    }
    if (s.outputs.empty()) fail("'#output' (types need at least one output)");
    return s;
  }

  // #neuron t:cell;  |  #neuron t:Id f:IdOut,... = #transformof f:IdIn,...;
  StatementNode neuron() {
    Name type = name();
    expect_punct(":");
    Name second = name();
    if (at_punct(";")) {
      return NeuronNameStmt{std::move(type), std::move(second)};
    }
    NeuronDeclStmt s{std::move(type), second.text(), {}, {}};
    s.outputs = bindings();
    expect_punct("=");
    if (!at_keyword("transformof")) fail("'#transformof'");
    take();
    if (!at_punct(";")) {
      s.inputs = bindings();
    }
    return s;
  }

  StreamDeclStmt stream_decl() {
    Name kind = name();
    expect_punct(":");
    std::string stream_id = ident();
    expect_punct("=");
    if (!at_keyword("neuroninput")) fail("'#neuroninput'");
    take();
    std::string neuron_id = ident();
    expect_punct(".");
    Name field = name();
    return {std::move(kind), std::move(stream_id), std::move(neuron_id),
            std::move(field)};
  }

  WeightStmt weight() {
    WeightStmt s;
    s.dst = port_ref();
    s.src = port_ref();
    expect_punct("=");
    s.value = signed_number();
    return s;
  }

  UpdateWeightsStmt update_weights() {
    UpdateWeightsStmt s;
    s.lhs = mask_expr();
    expect_punct("+=");
    s.rhs = mask_expr();
    return s;
  }

  ShowStmt show() {
    ShowStmt s;
    if (at(Token::Kind::name) && cur().text == "matrix" &&
        toks_[i_ + 1].kind == Token::Kind::punct && toks_[i_ + 1].text == ";") {
      take();
      s.matrix = true;
      return s;
    }
    s.ref = port_ref();
    return s;
  }
};

}  // namespace

std::vector<Statement> parse_tokens(const std::vector<Token>& toks) {
  return Parser(toks).program();
}

std::vector<Statement> parse_program(std::string_view src) {
  return parse_tokens(tokenize(src));
}

}  // namespace dmm
