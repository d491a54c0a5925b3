#pragma once

#include <cstdint>
#include <memory>
#include <type_traits>
#include <vector>

namespace uec {

// Every parallel kernel in the library has a serial twin selected by this
// flag. Serial is the reference implementation the tests compare against;
// results are required to be bit-identical because parallel loops only
// fill independent slots and all floating reductions run serially in a
// fixed index order afterwards.
enum class Exec { serial, parallel };

// Worker cap shared by all kernels (also set by the CLI --threads flag).
// 0 means "use the OpenMP default".
void set_max_threads(int threads);
int max_threads();

namespace detail {
void run_indexed(std::int64_t count, Exec exec, void* ctx, void (*body)(void*, std::int64_t));
}

// Apply fn(i) for i in [0, count); iterations must be independent.
template <typename Fn>
void for_each_index(std::int64_t count, Exec exec, Fn&& fn) {
    using F = std::remove_reference_t<Fn>;
    auto thunk = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_indexed(count, exec, static_cast<void*>(std::addressof(fn)), thunk);
}

// Fill-then-reduce: evaluates fn(i) into a vector in parallel, leaving the
// (order-sensitive) reduction to the caller.
template <typename T, typename Fn>
std::vector<T> indexed_map(std::int64_t count, Exec exec, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(count));
    auto body = [&](std::int64_t i) { out[static_cast<std::size_t>(i)] = fn(i); };
    for_each_index(count, exec, body);
    return out;
}

}  // namespace uec
