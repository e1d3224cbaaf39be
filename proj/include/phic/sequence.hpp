#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phic {

using Symbol = std::uint32_t;

// A finite symbol string over a declared alphabet {0, ..., alphabet_size-1}.
// Intermediate pair-substitution sequences may carry symbols >= alphabet_size.
struct SymbolSequence {
    std::vector<Symbol> symbols;
    std::uint32_t alphabet_size = 2;

    SymbolSequence() = default;
    SymbolSequence(std::vector<Symbol> s, std::uint32_t alphabet)
        : symbols(std::move(s)), alphabet_size(alphabet) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    Symbol operator[](std::size_t i) const { return symbols[i]; }
    std::span<const Symbol> view() const { return symbols; }

    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
};

// Convenience for tests and the CLI: "11010010" -> {1,1,0,1,0,0,1,0}.
// Letters map to their order of first appearance ("aacg" -> {0,0,1,2}).
SymbolSequence sequence_from_string(const std::string& text, std::uint32_t alphabet_size);

bool is_constant(std::span<const Symbol> s);

// Bit complement of a binary sequence.
SymbolSequence complement(const SymbolSequence& s);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// One decimal symbol per line, LF terminated. Blank trailing lines are ignored.
// alphabet_size == 0 means "infer": max symbol + 1, at least 2.
SymbolSequence read_symbol_text(std::istream& in, std::uint32_t alphabet_size = 0);
void write_symbol_text(std::ostream& out, std::span<const Symbol> s);

}  // namespace phic
