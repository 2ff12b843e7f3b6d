#include "density_ref.hpp"

namespace theta2 {

namespace {

constexpr DensityRow kRows[] = {
    // basic classes mod 8, first 2^17 candidates
    {3, 1, 7, 8, 131072, 65411},
    {5, 1, 7, 8, 131072, 65397},
    {5, 2, 7, 8, 131072, 65713},
    {7, 1, 7, 8, 131072, 65185},
    {7, 2, 7, 8, 131072, 65474},
    {7, 3, 7, 8, 131072, 65622},
    {9, 1, 1, 8, 131072, 65495},
    {9, 2, 1, 8, 131072, 65666},
    {9, 4, 1, 8, 131072, 65367},
    {9, 1, 7, 8, 131072, 65877},
    {9, 2, 7, 8, 131072, 65579},
    {9, 4, 7, 8, 131072, 65813},
    // the 14 mod 16 class of l=7, first 2^16 candidates
    {7, 1, 14, 16, 65536, 32673},
    {7, 2, 14, 16, 65536, 32716},
    {7, 3, 14, 16, 65536, 32981},
    // the 2 mod 4 class of l=9 (inside the complement), first 2^18
    {9, 1, 2, 4, 262144, 102284},
    {9, 2, 2, 4, 262144, 110034},
    {9, 4, 2, 4, 262144, 137657},
};

}  // namespace

std::span<const DensityRow> density_reference_rows() { return kRows; }

}  // namespace theta2
