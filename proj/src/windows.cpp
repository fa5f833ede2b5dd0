#include "pbv/hill.hpp"

namespace pbv {

// Window elements whose θ-images generate the coordinate functions.
// n=2: θ(W_k) = B_k; n=3: θ(E^X_k) = 1/(1-X_k), θ(E^Y_k) = 1/(1-Y_k).

SwapElement window_element_B(int k) { return cross_fraction(k - 1, k + 2, k + 1, k); }

SwapElement corner_element_X(int k) { return cross_fraction(k - 2, k - 1, k, k + 1); }

SwapElement corner_element_Y(int k) { return cross_fraction(k + 2, k + 1, k - 1, k - 2); }

}  // namespace pbv
