#include "swnav/sizes.hpp"

#include <charconv>
#include <limits>

#include "swnav/lattice.hpp"

namespace swnav {

namespace {

std::size_t parse_count(std::string_view text, const std::string& context)
{
    std::size_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw InputError("cannot parse '" + std::string(text) + "' in '" + context + "'");
    }
    return value;
}

std::size_t checked_mul(std::size_t a, std::size_t b, const std::string& context)
{
    if (b != 0 && a > std::numeric_limits<std::size_t>::max() / b) throw InputError("size overflow in '" + context + "'");
    return a * b;
}

} // namespace

std::vector<std::size_t> parse_sizes(const std::string& text)
{
    std::vector<std::size_t> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string::npos) end = text.size();
        const std::string_view item(text.data() + begin, end - begin);
        const auto x = item.find('x');
        if (x == std::string_view::npos) {
            out.push_back(parse_count(item, text));
        } else {
            const auto caret = item.find('^', x);
            if (caret == std::string_view::npos) throw InputError("expected BASExMULT^COUNT, got '" + std::string(item) + "'");
            const std::size_t base = parse_count(item.substr(0, x), text);
            const std::size_t mult = parse_count(item.substr(x + 1, caret - x - 1), text);
            const std::size_t count = parse_count(item.substr(caret + 1), text);
            if (count == 0) throw InputError("size run '" + std::string(item) + "' has zero entries");
            std::size_t v = base;
            for (std::size_t i = 0; i < count; ++i) {
                out.push_back(v);
                if (i + 1 < count) v = checked_mul(v, mult, text);
            }
        }
        begin = end + 1;
    }
    if (out.empty()) throw InputError("empty size list");
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] <= out[i - 1]) throw InputError("sizes must be strictly increasing in '" + text + "'");
    }
    return out;
}

std::string StepCount::to_string() const
{
    return std::to_string(value) + (per_vertex ? "n" : "");
}

StepCount parse_step_count(const std::string& text)
{
    if (!text.empty() && text.back() == 'n') {
        return StepCount{parse_count(std::string_view(text).substr(0, text.size() - 1), text), true};
    }
    return StepCount{parse_count(text, text), false};
}

} // namespace swnav
