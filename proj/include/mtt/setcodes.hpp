#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mtt/nat.hpp"
#include "mtt/verdict.hpp"

namespace mtt::setcodes {

// Bounded evaluator for the five mutually defined fix-point predicates on
// set codes: Set(n), t eps n (member), t noteps n, t ==_n s, t =/=_n s,
// together with Fam(m,n). The least fixed point is computed by memoized
// unfolding with a depth bound; non-membership and inequality are primitive
// predicates obtained from the positive/dual transformation of the clause
// bodies, never classical negations.

enum class Pred { Set, Mem, NotMem, Eq, Neq };

// What the realizer set of a code looks like, when we can tell.
struct Summary {
  enum Kind { Empty, AllNat, Finite, Opaque } kind = Opaque;
  std::vector<Nat> elems;  // Finite only
};

class Engine {
 public:
  Verdict is_set_code(const Nat& n, const Budget& b);
  Verdict member(const Nat& t, const Nat& n, const Budget& b);
  Verdict not_member(const Nat& t, const Nat& n, const Budget& b);
  Verdict eq(const Nat& t, const Nat& s, const Nat& n, const Budget& b);
  Verdict neq(const Nat& t, const Nat& s, const Nat& n, const Budget& b);
  Verdict fam(const Nat& m, const Nat& n, const Budget& b);

  Verdict query(Pred p, const Nat& t, const Nat& s, const Nat& n, const Budget& b);

  // Exhaustive member list of the code's carrier, when it is finite and
  // recognizably so.
  std::optional<std::vector<Nat>> finite_members(const Nat& n, const Budget& b);

  // Certifies that eps/noteps (and ==/=/=) on this code are decidable and
  // complementary for every candidate, so guarded quantifiers over the code
  // can be answered exactly. Codes of function spaces over inhabited domains
  // are never certified: a candidate's convergence cannot be bounded.
  Verdict complementary(const Nat& n, const Budget& b);

  Summary summarize(const Nat& n, const Budget& b);

  void clear();

 private:
  friend struct EngineOps;

  struct Key {
    int pred;
    Nat a, bb, c;
    bool operator==(const Key& o) const {
      return pred == o.pred && a == o.a && bb == o.bb && c == o.c;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<int>()(k.pred);
      h = h * 1099511628211ull ^ k.a.hash();
      h = h * 1099511628211ull ^ k.bb.hash();
      h = h * 1099511628211ull ^ k.c.hash();
      return h;
    }
  };

  std::optional<bool> memo_get(const Key& k);
  void memo_put(const Key& k, const Verdict& v);
  Verdict complementary_impl(const Nat& n, const Budget& b2);
  std::optional<std::vector<Nat>> finite_members_impl(const Nat& n, const Budget& b);

  std::mutex mu_;
  std::unordered_map<Key, bool, KeyHash> memo_;
  std::unordered_map<Nat, bool, NatHash> cert_memo_;
  std::unordered_map<Nat, std::vector<Nat>, NatHash> members_memo_;
};

Engine& engine();

}  // namespace mtt::setcodes
