#pragma once

// Words in the pure mapping class group of (Sigma_g, Z) and their actions.
// A word [L_1, ..., L_m] denotes L_1 o ... o L_m: the rightmost letter acts
// first.

#include <framedhom/framing.hpp>
#include <framedhom/paut.hpp>

#include <variant>
#include <vector>

namespace framedhom {

/// Dehn twist T_c^power about a simple closed curve in punctured class c,
/// whose winding number under the reference framing is w.
struct Twist {
  PunctVec c;
  Integer power;
  Integer w;
};

/// Pushes p_point once around a loop in absolute class u. On relative
/// homology x -> x + <x, d_point> u; on closed curves the winding changes by
/// -kappa_point * <y, u>.
struct PointPush {
  int point;
  AbsVec u;
};

using Generator = std::variant<Twist, PointPush>;

class Word {
 public:
  /// Validates every letter against spec: primitive classes, nonzero twist
  /// powers, point indices in 1..n.
  explicit Word(SurfaceSpec spec, std::vector<Generator> letters = {});

  const SurfaceSpec& spec() const { return spec_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool has_point_push() const;

  /// Concatenation: (a + b) acts as a o b.
  friend Word operator+(const Word& a, const Word& b);

 private:
  SurfaceSpec spec_;
  std::vector<Generator> letters_;
};

Generator inverse(const Generator& letter);
Word inverse(const Word& word);

/// Standard alphabet: twist about the basis curve at interleaved coordinate k
/// (x_i at 2i-2, y_i at 2i-1), with its winding read from f.
Twist curve_twist(const Framing& f, Eigen::Index k, const Integer& power = 1);
/// Twist about the puncture loop Delta_point, winding -1 - kappa_point.
Twist puncture_twist(const SurfaceSpec& spec, int point, const Integer& power = 1);

/// Parity that any simple representative of c must have: for
/// c = v + sum m_j d_j it is P(v) + sum m_j kappa_j.
int expected_twist_parity(const Framing& f, const PunctVec& c);

/// Matrix of a single letter on relative homology.
IntMatrix letter_matrix(const SurfaceSpec& spec, const Generator& letter);
/// Mod-2 action of a single letter on absolute homology.
Mod2Matrix letter_action_mod2(const SurfaceSpec& spec, const Generator& letter);
/// Delta of a single letter: x -> phi(L(x)) - phi(x) mod 2.
CohomClass letter_delta(const SurfaceSpec& spec, const Generator& letter);

RelVec act_rel(const Word& word, const RelVec& x);
PAutElem word_to_paut(const Word& word);
Mod2Matrix word_action_mod2(const Word& word);

/// A curve or arc followed through a word: its relative class and twice its
/// winding number (arcs have half-integral winding).
struct TrackedClass {
  RelVec cls;
  Integer wind2;
};

/// L(t), via twist-linearity. Point-pushes reject arcs (PointPushOnArcs).
TrackedClass apply_letter(const SurfaceSpec& spec, const Generator& letter, const TrackedClass& t);
/// word(t), rightmost letter first.
TrackedClass push_forward(const Word& word, TrackedClass t);
/// word^{-1}(t).
TrackedClass pull_back(const Word& word, TrackedClass t);

/// The tracked basis element at interleaved coordinate k, or the arc a_point.
TrackedClass tracked_curve(const Framing& f, Eigen::Index k);
TrackedClass tracked_arc(const Framing& f, int point);

/// (word . f)(b) = f(word^{-1}(b)) on every basis element.
/// Throws PointPushOnArcs if f carries arcs and word has point-pushes.
Framing act_framing(const Word& word, const Framing& f);

/// Mod-2 change of winding numbers, assembled letter by letter with
/// Delta(fg) = g* Delta(f) + Delta(g).
CohomClass delta_word(const Word& word, const Framing& f);

/// A word whose relative action is a: point-pushes realizing the RelAut part
/// followed by twists from factor_sp, windings chosen with the forced parity.
Word paut_to_word(const PAutElem& a, const Framing& f);

}  // namespace framedhom
