#pragma once

// Small RAII layer over the C API for the command-line tool.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "circcodes.h"

namespace circ_cli {

class ApiError : public std::runtime_error {
 public:
  ApiError(circ_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  circ_status status() const noexcept { return status_; }

 private:
  circ_status status_;
};

inline void check(circ_status status) {
  if (status != CIRC_OK) {
    std::string msg = circ_last_error();
    if (msg.empty()) msg = circ_status_string(status);
    throw ApiError(status, msg);
  }
}

struct GraphDeleter {
  void operator()(circ_graph* g) const { circ_graph_free(g); }
};
struct CodeDeleter {
  void operator()(circ_code* c) const { circ_code_free(c); }
};
struct ResultDeleter {
  void operator()(circ_search_result* r) const { circ_search_result_free(r); }
};

using Graph = std::unique_ptr<circ_graph, GraphDeleter>;
using CodePtr = std::unique_ptr<circ_code, CodeDeleter>;
using Result = std::unique_ptr<circ_search_result, ResultDeleter>;

// Calls f(buf, cap, &count) twice: once to size the buffer, once to fill it.
template <class T, class F>
std::vector<T> fetch(F&& f) {
  size_t count = 0;
  const circ_status first = f(nullptr, 0, &count);
  if (first == CIRC_OK) return {};
  if (first != CIRC_E_BUFFER_TOO_SMALL) check(first);
  std::vector<T> out(count);
  check(f(out.data(), out.size(), &count));
  return out;
}

inline Graph make_graph(std::int64_t n, const std::vector<std::int64_t>& offsets) {
  circ_graph* g = nullptr;
  check(circ_graph_create(n, offsets.data(), offsets.size(), &g));
  return Graph(g);
}

inline CodePtr make_code(const circ_graph* g, const std::vector<std::int64_t>& members) {
  circ_code* c = nullptr;
  check(circ_code_create(g, members.data(), members.size(), &c));
  return CodePtr(c);
}

inline std::vector<std::uint32_t> members_of(const circ_code* c) {
  return fetch<std::uint32_t>(
      [c](std::uint32_t* b, size_t cap, size_t* n) { return circ_code_members(c, b, cap, n); });
}

}  // namespace circ_cli
