#ifndef WORSTLAB_VALUE_HPP
#define WORSTLAB_VALUE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "worstlab/counters.hpp"

namespace worstlab {

// A value is either an integer leaf or a finite list of values. Lists may
// nest to any depth; the empty list is a valid value.
class NestedValue {
public:
    NestedValue() : data_(std::int64_t{0}) {}

    static NestedValue leaf(std::int64_t v) { return NestedValue(v); }
    static NestedValue list(std::vector<NestedValue> items) {
        return NestedValue(std::move(items));
    }

    bool is_leaf() const { return std::holds_alternative<std::int64_t>(data_); }
    bool is_list() const { return !is_leaf(); }

    std::int64_t leaf_value() const { return std::get<std::int64_t>(data_); }
    std::int64_t& leaf_value() { return std::get<std::int64_t>(data_); }

    const std::vector<NestedValue>& items() const {
        return std::get<std::vector<NestedValue>>(data_);
    }
    std::vector<NestedValue>& items() {
        return std::get<std::vector<NestedValue>>(data_);
    }

    bool operator==(const NestedValue&) const = default;

private:
    explicit NestedValue(std::int64_t v) : data_(v) {}
    explicit NestedValue(std::vector<NestedValue> items) : data_(std::move(items)) {}

    std::variant<std::int64_t, std::vector<NestedValue>> data_;
};

struct Shape {
    std::size_t depth = 0;      // 0 for a leaf
    std::size_t leaf_count = 0; // 1 for a leaf
    bool uniform = true;        // siblings at every level share a shape

    bool operator==(const Shape&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Counted copy: charges one leaf_copy per leaf materialized.
NestedValue deep_copy(const NestedValue& src, CounterSet& counters);
std::vector<NestedValue> deep_copy(const std::vector<NestedValue>& src, CounterSet& counters);

Shape shape_of(const NestedValue& v);
Shape shape_of(const std::vector<NestedValue>& list);

// Structural shape equality: same leaf/list kind and same lengths at every
// position.
bool shape_equal(const NestedValue& a, const NestedValue& b);

std::size_t leaf_count(const NestedValue& v);
std::size_t leaf_count(const std::vector<NestedValue>& list);

// Grammar: value := integer | '[' (value (',' value)*)? ']', whitespace
// allowed between tokens. Throws ParseError with a byte offset.
NestedValue parse_value(std::string_view text);

// Canonical form: no whitespace, comma separated, square brackets.
std::string serialize_value(const NestedValue& v);
std::string serialize_value(const std::vector<NestedValue>& list);

} // namespace worstlab

#endif // WORSTLAB_VALUE_HPP
