#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace warpcurv {

/// Dense rank-R tensor over an n-dimensional index space, stored row-major.
template <std::size_t Rank>
class SquareTensor {
public:
    SquareTensor() = default;
    explicit SquareTensor(int n) : n_(n), data_(size_for(n), 0.0) {}

    int dim() const { return n_; }
    std::size_t size() const { return data_.size(); }

    template <typename... Idx>
    double& operator()(Idx... idx) {
        static_assert(sizeof...(Idx) == Rank);
        return data_[offset({static_cast<int>(idx)...})];
    }

    template <typename... Idx>
    double operator()(Idx... idx) const {
        static_assert(sizeof...(Idx) == Rank);
        return data_[offset({static_cast<int>(idx)...})];
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    static std::size_t size_for(int n) {
        std::size_t s = 1;
        for (std::size_t r = 0; r < Rank; ++r) s *= static_cast<std::size_t>(n);
        return s;
    }

    std::size_t offset(std::array<int, Rank> idx) const {
        std::size_t off = 0;
        for (int i : idx) off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
        return off;
    }

    int n_ = 0;
    std::vector<double> data_;
};

using Matrix = SquareTensor<2>;
using Tensor3 = SquareTensor<3>;
using Tensor4 = SquareTensor<4>;

} // namespace warpcurv
