#include "pgroup/dsl.hpp"

namespace pgroup::dsl {

namespace {

class Evaluator {
 public:
  explicit Evaluator(GroupContext& ctx) : ctx_(ctx), g_(ctx.group()) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kOrd: return integer(sub(e.args[0]).order());
      case Expr::Kind::kIdx: {
        const Subgroup a = sub(e.args[0]);
        const Subgroup b = sub(e.args[1]);
        if (!b.is_subgroup_of(a))
          throw EvalError("Idx(" + to_string(e.args[0]) + "," + to_string(e.args[1]) +
                          "): second argument is not contained in the first");
        return integer(a.order() / b.order());
      }
      default: return Value{sub(e), 0};
    }
  }

 private:
  static Value integer(std::size_t v) { return Value{std::nullopt, v}; }

  Subgroup sub(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kVar: return whole_group(g_);
      case Expr::Kind::kComm: return iterated_commutator(g_, sub(e.args[0]), sub(e.args[1]), e.k);
      case Expr::Kind::kCall: return call(e);
      case Expr::Kind::kOrd:
      case Expr::Kind::kIdx: break;
    }
    throw EvalError("integer-valued expression used where a subgroup is required");
  }

  Subgroup call(const Expr& e) {
    const std::string& n = e.name;
    if (n == "C") {
      if (e.args[0].kind != Expr::Kind::kVar)
        throw UnsupportedAmbient("C(A, B) is only supported with A = S");
      return centralizer(g_, sub(e.args[1]));
    }
    const Subgroup a = sub(e.args[0]);
    if (n == "Z") return center(g_, a);
    if (n == "Omega1") return omega1(g_, a);
    if (n == "ncl") return normal_closure(g_, a);
    if (n == "derived") return commutator_subgroup(g_, a, a);
    if (n == "join") return join(g_, a, sub(e.args[1]));
    if (n == "meet") return meet(g_, a, sub(e.args[1]));
    if (n == "J" || n == "X" || n == "X1") {
      if (a.is_whole()) {
        if (n == "J") return ctx_.thompson();
        if (n == "X") return ctx_.oliver_subgroup();
        return ctx_.x1();
      }
      const Standalone s = standalone(g_, a, ctx_.caps());
      GroupContext inner(s.group, ctx_.caps());
      const Subgroup& r = n == "J" ? inner.thompson() : n == "X" ? inner.oliver_subgroup() : inner.x1();
      return to_parent(g_, s, r);
    }
    throw EvalError("unknown operator " + n);
  }

  GroupContext& ctx_;
  const Group& g_;
};

}  // namespace

Value eval_expr(const Expr& e, GroupContext& ctx) { return Evaluator(ctx).eval(e); }

Json value_json(const Expr& e, const Value& v) {
  Json j;
  j["expr"] = to_string(e);
  if (v.is_integer()) {
    j["kind"] = "integer";
    j["value"] = v.integer;
    return j;
  }
  const Subgroup& h = *v.subgroup;
  const Group& g = h.parent();
  j["kind"] = "subgroup";
  j["order"] = h.order();
  j["index"] = h.index_in_parent();
  Json flags;
  flags["normal"] = is_normal(g, h);
  const auto rank = elementary_abelian_rank(g, h);
  flags["elementary_abelian"] = rank.has_value();
  flags["rank"] = rank ? Json(*rank) : Json(nullptr);
  j["flags"] = std::move(flags);
  Json gens = Json::array();
  for (Elem x : h.gens()) gens.push_back(g.permutation(x).to_string());
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace pgroup::dsl
