#pragma once

// Combinatorial Grassmannians G_k(N): points are the k-subsets of {1..N},
// lines the (k+1)-subsets, incidence being inclusion. G_k(N) is a
// (C(N,k)_{N-k}, C(N,k+1)_{k+1})-configuration.

#include <string>
#include <vector>

#include "klein/incidence.hpp"
#include "klein/params.hpp"

namespace klein {

// All k-subsets of {1..n} as sorted vectors, in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

// "{1,4}" - the canonical label of a sorted mark subset.
std::string subset_label(const std::vector<int>& marks);

// Inverse of subset_label; accepts any delimiter between the integers.
// Raises invalid_structure when no marks are found or they are not
// strictly increasing.
std::vector<int> parse_subset_label(const std::string& label);

// Raises invalid_arity unless 1 <= k <= n. k = n gives one point, no lines.
IncidenceStructure build_grassmannian(int k, int n);

// (C(n,k), n-k, C(n,k+1), k+1) without building the structure.
ConfigParams grassmannian_params(int k, int n);

} // namespace klein
