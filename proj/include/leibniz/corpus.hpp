#pragma once

#include <string>
#include <vector>

#include "leibniz/io.hpp"

namespace leibniz {

/// Bundled algebra families. Every generator validates the Leibniz identity
/// on construction; parameters outside a family's range raise RangeError.

/// Characteristically nilpotent family, dim n >= 4:
///   [e1,e1]=e3, [ei,e1]=e_{i+1} (2<=i<=n-1), [e1,e2]=e4,
///   [ei,e2]=e_{i+2} (2<=i<=n-2).
LeibnizAlgebra make_charnil(std::size_t n);

/// Solvable non-nilpotent family, dim n+1, n >= 4. alpha holds the n-4
/// parameters a_4..a_{n-1} in order:
///   [e1,e1]=e3, [ei,e1]=e_{i+1} (2<=i<=n-1),
///   [e1,e_{n+1}]=[e2,e_{n+1}]=e2 + sum_{i=4}^{n-1} a_i e_i,
///   [ei,e_{n+1}]=ei + sum_{j=i+2}^{n} a_{j-i+2} e_j (3<=i<=n).
LeibnizAlgebra make_solvable_ex31(std::size_t n, const std::vector<Rat>& alpha);

/// Solvable family with a semisimple right-multiplication, dim n+1, n >= 2:
///   [ei,e1]=e_{i+1} (1<=i<=n-1), [x,e1]=e1, [ei,x]=-i*ei (1<=i<=n)
/// with x = e_{n+1}.
LeibnizAlgebra make_cas_ex33(std::size_t n);

/// 7-dimensional characteristically but not strongly nilpotent algebra.
LeibnizAlgebra make_ex7();
/// 8-dimensional filiform counterpart of make_ex7.
LeibnizAlgebra make_ex8();

LeibnizAlgebra make_abelian(std::size_t n);  // n >= 1
LeibnizAlgebra make_lie_heisenberg();

/// Block direct sum; the right block's indices are shifted past the left's.
LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b,
                          const std::string& name);

struct CorpusEntry {
  std::string filename;
  AlgebraDoc doc;
};

/// The bundled corpus: every entry passes the identity check and carries the
/// annotations used by the invariance suite. Deterministic order.
std::vector<CorpusEntry> corpus_manifest();

/// Deliberately invalid fixture (identity fails at (1,1,1)); stored with the
/// unchecked flag so it can be written and loaded for negative tests. Not
/// part of corpus_manifest.
AlgebraDoc corpus_bad_table();

}  // namespace leibniz
