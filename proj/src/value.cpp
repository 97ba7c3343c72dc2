#include "worstlab/value.hpp"

#include <charconv>

namespace worstlab {

NestedValue deep_copy(const NestedValue& src, CounterSet& counters) {
    if (src.is_leaf()) {
        counters.charge_leaf_copy();
        return src;
    }
    std::vector<NestedValue> items;
    items.reserve(src.items().size());
    for (const auto& item : src.items())
        items.push_back(deep_copy(item, counters));
    return NestedValue::list(std::move(items));
}

std::vector<NestedValue> deep_copy(const std::vector<NestedValue>& src, CounterSet& counters) {
    std::vector<NestedValue> out;
    out.reserve(src.size());
    for (const auto& item : src)
        out.push_back(deep_copy(item, counters));
    return out;
}

Shape shape_of(const NestedValue& v) {
    if (v.is_leaf()) return Shape{0, 1, true};
    return shape_of(v.items());
}

Shape shape_of(const std::vector<NestedValue>& list) {
    Shape result{1, 0, true};
    bool first = true;
    Shape child_shape;
    for (const auto& item : list) {
        Shape s = shape_of(item);
        result.leaf_count += s.leaf_count;
        result.depth = std::max(result.depth, s.depth + 1);
        if (!s.uniform) result.uniform = false;
        if (first) {
            child_shape = s;
            first = false;
        } else if (!(s == child_shape) ||
                   !shape_equal(list.front(), item)) {
            result.uniform = false;
        }
    }
    return result;
}

bool shape_equal(const NestedValue& a, const NestedValue& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return true;
    const auto& ia = a.items();
    const auto& ib = b.items();
    if (ia.size() != ib.size()) return false;
    for (std::size_t i = 0; i < ia.size(); ++i)
        if (!shape_equal(ia[i], ib[i])) return false;
    return true;
}

std::size_t leaf_count(const NestedValue& v) {
    if (v.is_leaf()) return 1;
    return leaf_count(v.items());
}

std::size_t leaf_count(const std::vector<NestedValue>& list) {
    std::size_t total = 0;
    for (const auto& item : list) total += leaf_count(item);
    return total;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NestedValue parse() {
        skip_ws();
        NestedValue v = parse_value();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "trailing characters after value");
        return v;
    }

private:
    NestedValue parse_value() {
        if (pos_ >= text_.size())
            throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '[') return parse_list();
        if (c == '-' || (c >= '0' && c <= '9')) return parse_integer();
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    NestedValue parse_list() {
        ++pos_; // '['
        std::vector<NestedValue> items;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ']') {
            ++pos_;
            return NestedValue::list(std::move(items));
        }
        for (;;) {
            items.push_back(parse_value());
            skip_ws();
            if (pos_ >= text_.size())
                throw ParseError(pos_, "unterminated list");
            if (text_[pos_] == ',') {
                ++pos_;
                skip_ws();
                continue;
            }
            if (text_[pos_] == ']') {
                ++pos_;
                return NestedValue::list(std::move(items));
            }
            throw ParseError(pos_, "expected ',' or ']'");
        }
    }

    NestedValue parse_integer() {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError(pos_, "integer out of 64-bit range");
        if (ec != std::errc() || ptr == begin)
            throw ParseError(pos_, "malformed integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return NestedValue::leaf(value);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void serialize_into(const NestedValue& v, std::string& out) {
    if (v.is_leaf()) {
        out += std::to_string(v.leaf_value());
        return;
    }
    out += '[';
    bool first = true;
    for (const auto& item : v.items()) {
        if (!first) out += ',';
        first = false;
        serialize_into(item, out);
    }
    out += ']';
}

} // namespace

NestedValue parse_value(std::string_view text) {
    return Parser(text).parse();
}

std::string serialize_value(const NestedValue& v) {
    std::string out;
    serialize_into(v, out);
    return out;
}

std::string serialize_value(const std::vector<NestedValue>& list) {
    return serialize_value(NestedValue::list(list));
}

} // namespace worstlab
