#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace hc {

// A lazy, multi-shot sequence. cursor() starts a fresh pass; every pull
// produces the next element or nothing. Each cursor is a single-consumer
// object, but any number of independent cursors may coexist.
template <typename T>
class Seq {
  public:
    using value_type = T;
    using Cursor = std::function<std::optional<T>()>;
    using Factory = std::function<Cursor()>;

    Seq()
        : make_([] { return []() -> std::optional<T> { return std::nullopt; }; }) {}
    explicit Seq(Factory make) : make_(std::move(make)) {}

    Cursor cursor() const { return make_(); }

    struct iterator {
        using iterator_category = std::input_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;
        using pointer = const T*;
        using reference = const T&;

        iterator() = default;
        explicit iterator(Cursor c) : cur(std::move(c)) { item = cur(); }

        reference operator*() const { return *item; }
        pointer operator->() const { return &*item; }
        iterator& operator++() {
            item = cur();
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return !item.has_value(); }

        Cursor cur;
        std::optional<T> item;
    };

    iterator begin() const { return iterator(cursor()); }
    std::default_sentinel_t end() const { return {}; }

  private:
    Factory make_;
};

template <typename T>
Seq<T> seq_from_vector(std::vector<T> items) {
    auto data = std::make_shared<const std::vector<T>>(std::move(items));
    return Seq<T>([data] {
        std::size_t i = 0;
        return [data, i]() mutable -> std::optional<T> {
            if (i >= data->size()) return std::nullopt;
            return (*data)[i++];
        };
    });
}

template <typename F, typename T>
auto map_lazy(F f, Seq<T> s) -> Seq<std::decay_t<std::invoke_result_t<F, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F, const T&>>;
    return Seq<U>([f, s] {
        auto cur = s.cursor();
        return [f, cur]() mutable -> std::optional<U> {
            auto v = cur();
            if (!v) return std::nullopt;
            return f(*v);
        };
    });
}

template <typename P, typename T>
Seq<T> filter_lazy(P pred, Seq<T> s) {
    return Seq<T>([pred, s] {
        auto cur = s.cursor();
        return [pred, cur]() mutable -> std::optional<T> {
            for (;;) {
                auto v = cur();
                if (!v) return std::nullopt;
                if (pred(*v)) return v;
            }
        };
    });
}

template <typename T>
Seq<T> flatten(Seq<Seq<T>> outer) {
    return Seq<T>([outer] {
        auto out = outer.cursor();
        std::optional<typename Seq<T>::Cursor> inner;
        return [out, inner]() mutable -> std::optional<T> {
            for (;;) {
                if (inner) {
                    auto v = (*inner)();
                    if (v) return v;
                    inner.reset();
                }
                auto next = out();
                if (!next) return std::nullopt;
                inner = next->cursor();
            }
        };
    });
}

// All |A|*|B| pairs; the first factor varies fastest (matching the ordering
// of the total-degree start tuples).
template <typename A, typename B>
Seq<std::pair<A, B>> product(Seq<A> a, Seq<B> b) {
    return Seq<std::pair<A, B>>([a, b] {
        auto bcur = b.cursor();
        std::optional<B> bval = bcur();
        auto acur = a.cursor();
        return [a, acur, bcur, bval]() mutable -> std::optional<std::pair<A, B>> {
            for (;;) {
                if (!bval) return std::nullopt;
                auto av = acur();
                if (av) return std::make_pair(std::move(*av), *bval);
                bval = bcur();
                acur = a.cursor();
            }
        };
    });
}

// Pairs until either input is exhausted.
template <typename A, typename B>
Seq<std::pair<A, B>> zip(Seq<A> a, Seq<B> b) {
    return Seq<std::pair<A, B>>([a, b] {
        auto ac = a.cursor();
        auto bc = b.cursor();
        return [ac, bc]() mutable -> std::optional<std::pair<A, B>> {
            auto av = ac();
            if (!av) return std::nullopt;
            auto bv = bc();
            if (!bv) return std::nullopt;
            return std::make_pair(std::move(*av), std::move(*bv));
        };
    });
}

// Left fold; holds only the accumulator and one element at a time.
template <typename F, typename T, typename C>
C accumulate(F f, const Seq<T>& s, C init) {
    C acc = std::move(init);
    for (auto cur = s.cursor();;) {
        auto v = cur();
        if (!v) break;
        acc = f(std::move(acc), *v);
    }
    return acc;
}

template <typename T>
std::size_t count(const Seq<T>& s) {
    return accumulate([](std::size_t c, const T&) { return c + 1; }, s, std::size_t{0});
}

template <typename P, typename T>
std::size_t conditional_count(P pred, const Seq<T>& s) {
    return accumulate([pred](std::size_t c, const T& v) { return pred(v) ? c + 1 : c; }, s,
                      std::size_t{0});
}

template <typename F, typename T>
double max_by(F f, const Seq<T>& s) {
    return accumulate([f](double c, const T& v) { return std::max<double>(c, f(v)); }, s,
                      -std::numeric_limits<double>::infinity());
}

// Short-circuits at the first satisfying element.
template <typename P, typename T>
bool any_lazy(P pred, const Seq<T>& s) {
    for (auto cur = s.cursor();;) {
        auto v = cur();
        if (!v) return false;
        if (pred(*v)) return true;
    }
}

// Short-circuits at the first satisfying element.
template <typename P, typename T>
std::optional<T> first_where(P pred, const Seq<T>& s) {
    for (auto cur = s.cursor();;) {
        auto v = cur();
        if (!v) return std::nullopt;
        if (pred(*v)) return v;
    }
}

template <typename T>
std::vector<T> collect(const Seq<T>& s) {
    std::vector<T> out;
    for (auto cur = s.cursor();;) {
        auto v = cur();
        if (!v) break;
        out.push_back(std::move(*v));
    }
    return out;
}

}  // namespace hc
