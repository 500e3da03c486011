#include "substdyn/corpus.hpp"

namespace substdyn {

std::string sigma_n_text(std::size_t n) {
  std::string a;
  for (std::size_t i = 1; i <= n; ++i) a += "a" + std::string(i, 'b');
  return "a -> " + a + "a\nb -> b\n";
}

namespace {

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c = {
      {"fibonacci", "Fibonacci", "0 -> 001\n1 -> 01\n"},
      {"fib_squared", "square of the Fibonacci substitution", "0 -> 00100101\n1 -> 00101\n"},
      {"wild_ab", "periodic example with a single bounded letter", "a -> ab\nb -> b\n"},
      {"tame_abb", "constant length three", "a -> abb\nb -> bbb\n"},
      {"empty", "letter swap with empty subshift", "a -> b\nb -> a\n"},
      {"chacon", "non-primitive Chacon", "a -> aaba\nb -> b\n"},
      {"abc_bounded", "two bounded letters on the right", "a -> abc\nb -> b\nc -> c\n"},
      {"square_language", "language of the square differs",
       "0 -> 0b 0b 1 0b\n0b -> 0 0 1 0\n1 -> 1\nX -> 0 0b\n"},
      {"bounded_growth", "bounded letters with growing limits", "a -> aaca\nb -> b\nc -> bb\n"},
      {"two_components", "two connected components", "a -> ab\nb -> a\nc -> cd\nd -> c\n"},
      {"fib_fixed_point", "Fibonacci plus a fixed point", "a -> ab\nb -> a\nc -> cc\nd -> ca\n"},
      {"nonperiodic_fixed_points", "non-periodic with periodic points",
       "a -> aa\nb -> aba\nc -> ccd\nd -> cd\ne -> bdecb\n"},
      {"acbd", "Thue-Morse with a bounded spacer", "a -> acb\nb -> bca\nc -> c\n"},
      {"bc_ca", "nontrivial prefix in the return decomposition", "a -> bc\nb -> b\nc -> ca\n"},
      {"acb_adb", "seed map that is not a bijection", "a -> acb\nb -> adb\nc -> dd\nd -> d\n"},
      {"fib_handle", "Fibonacci with one handle", "0 -> 001\n1 -> 01\n2 -> 021\n"},
      {"trib", "Tribonacci", "a -> ab\nb -> ac\nc -> a\n"},
      {"two_trib_bridge", "two Tribonaccis joined by a bridge",
       "0 -> 0201\n1 -> 001\n2 -> 0\n0b -> 0b 2b 0b 1b\n1b -> 0b 0b 1b\n2b -> 0b\nX -> 1 0b\n"},
      {"quad_fib_bridge", "Quadibonacci and Fibonacci joined by a bridge",
       "0 -> 0201\n1 -> 0301\n2 -> 001\n3 -> 0\n0b -> 0b 0b 1b\n1b -> 0b 1b\nX -> 1 0b\n"},
      {"aba_bbab_aa", "one proper invariant subset", "a -> aba\nb -> bbab\nc -> aa\n"},
      {"fib_handle_augmented", "augmented Fibonacci with a handle",
       "a -> aab\nb -> ab\nc -> c\nd -> bca\n"},
      {"proximal_fib", "Fibonacci with a proximal handle", "0 -> 001\n1 -> 01\n2 -> X021X\nX -> X\n"},
      {"fib_chacon", "Fibonacci and Chacon joined", "0 -> 001\n1 -> 01\na -> aaba\nb -> b\nX -> 1aXa0\n"},
      {"solenoid_ext", "Thue-Morse cubed extended by period doubling",
       "0 -> 01101001\n1 -> 10010110\na -> 011ab001\nb -> 10a1a110\n"},
      {"fib_companion", "companion substitution of Fibonacci", "a -> aab\nb -> ab\nc -> acab\n"},
      {"asym_sigma1", "first substitution with equal cohomology", "a -> cab\nb -> ac\nc -> a\n"},
      {"asym_sigma2", "second substitution with equal cohomology", "a -> bbac\nb -> a\nc -> b\n"},
      {"theta_sigma3", "primitive conjugate of sigma_3",
       "A -> AB\nB -> LMNWXYZAB\nL -> AB\nM -> LMN\nN -> WXYZLMN\nW -> AB\nX -> LMN\nY -> WXYZ\n"
       "Z -> WXYZ\n"},
  };
  for (std::size_t n = 2; n <= 5; ++n)
    c.push_back({"sigma_" + std::to_string(n), "sigma_n family, n = " + std::to_string(n),
                 sigma_n_text(n)});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::optional<CorpusEntry> find_corpus(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace substdyn
