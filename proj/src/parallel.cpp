#include "steklov/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace steklov {
namespace {

unsigned threads_from_environment() noexcept {
  const char* raw = std::getenv("STEKLOV_THREADS");
  unsigned requested = 0;
  if (raw != nullptr) {
    std::string_view text(raw);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), requested);
    if (ec != std::errc{} || ptr != text.data() + text.size()) requested = 0;
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

std::atomic<unsigned>& thread_cap() noexcept {
  static std::atomic<unsigned> cap{threads_from_environment()};
  return cap;
}

}  // namespace

unsigned max_threads() noexcept { return thread_cap().load(std::memory_order_relaxed); }

void set_max_threads(unsigned threads) noexcept {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  thread_cap().store(threads, std::memory_order_relaxed);
}

}  // namespace steklov
