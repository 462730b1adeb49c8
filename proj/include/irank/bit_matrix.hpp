#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace irank {

// Dense square boolean matrix stored as rows of 64-bit words.
class BitMatrix {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitMatrix() = default;

    explicit BitMatrix(std::size_t n)
        : n_(n), words_((n + word_bits - 1) / word_bits), data_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(std::size_t i, std::size_t j) const {
        return (data_[i * words_ + j / word_bits] >> (j % word_bits)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value = true) {
        word_type& w = data_[i * words_ + j / word_bits];
        const word_type mask = word_type{1} << (j % word_bits);
        if (value) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    std::span<const word_type> row(std::size_t i) const {
        return {data_.data() + i * words_, words_};
    }

    std::span<word_type> row(std::size_t i) {
        return {data_.data() + i * words_, words_};
    }

    // row(dst) |= row(src)
    void or_row(std::size_t dst, std::size_t src) {
        word_type* d = data_.data() + dst * words_;
        const word_type* s = data_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            d[w] |= s[w];
        }
    }

    std::size_t row_count(std::size_t i) const {
        std::size_t c = 0;
        for (word_type w : row(i)) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (word_type w : data_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for_each_in_row(i, [&](std::size_t j) { t.set(j, i); });
        }
        return t;
    }

    // Warshall closure, one row-OR per (k, i) pair.
    void transitive_closure() {
        for (std::size_t k = 0; k < n_; ++k) {
            for (std::size_t i = 0; i < n_; ++i) {
                if (i != k && test(i, k)) {
                    or_row(i, k);
                }
            }
        }
    }

    template <typename F>
    void for_each_in_row(std::size_t i, F&& f) const {
        const word_type* r = data_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            word_type bits = r[w];
            while (bits) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * word_bits + b);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<word_type> data_;
};

} // namespace irank
