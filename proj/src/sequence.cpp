#include "phic/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>

namespace phic {

SymbolSequence sequence_from_string(const std::string& text, std::uint32_t alphabet_size)
{
    std::vector<Symbol> out;
    out.reserve(text.size());
    bool digits = std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    std::map<char, Symbol> labels;
    for (char c : text) {
        if (digits) {
            out.push_back(static_cast<Symbol>(c - '0'));
        } else {
            auto [it, inserted] = labels.try_emplace(c, static_cast<Symbol>(labels.size()));
            out.push_back(it->second);
        }
    }
    return {std::move(out), alphabet_size};
}

bool is_constant(std::span<const Symbol> s)
{
    return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

SymbolSequence complement(const SymbolSequence& s)
{
    SymbolSequence out = s;
    for (auto& x : out.symbols) {
        if (x > 1)
            throw std::domain_error("complement: sequence is not binary");
        x ^= 1u;
    }
    return out;
}

SymbolSequence read_symbol_text(std::istream& in, std::uint32_t alphabet_size)
{
    std::vector<Symbol> symbols;
    std::string line;
    std::size_t lineno = 0;
    std::size_t blank_run = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty()) {
            ++blank_run;
            continue;
        }
        if (blank_run > 0)
            throw ParseError(lineno - blank_run, "blank line inside sequence");
        Symbol value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc() || ptr != line.data() + line.size())
            throw ParseError(lineno, "expected a non-negative decimal symbol, got '" + line + "'");
        symbols.push_back(value);
    }
    if (symbols.empty())
        throw std::domain_error("sequence file contains no symbols");

    Symbol max_symbol = *std::max_element(symbols.begin(), symbols.end());
    if (alphabet_size == 0)
        alphabet_size = std::max<std::uint32_t>(2, max_symbol + 1);
    else if (max_symbol >= alphabet_size)
        throw std::domain_error("symbol " + std::to_string(max_symbol) + " outside declared alphabet of size " +
                                std::to_string(alphabet_size));
    return {std::move(symbols), alphabet_size};
}

void write_symbol_text(std::ostream& out, std::span<const Symbol> s)
{
    for (Symbol x : s)
        out << x << '\n';
}

}  // namespace phic
