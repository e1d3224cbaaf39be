#include "phic/perturbation.hpp"

#include <random>
#include <stdexcept>

namespace phic {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view network_label, std::uint64_t state_index,
                          std::uint64_t trial)
{
    // FNV-1a over the label
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : network_label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::uint64_t s = mix64(root ^ mix64(h));
    s = mix64(s ^ mix64(state_index + 0x632be59bd9b4e019ull));
    s = mix64(s ^ mix64(trial + 0x8cb92ba72f3d8dd7ull));
    return s;
}

SymbolSequence gen_mep(std::size_t len, Symbol first_symbol, std::uint64_t seed)
{
    if (len < 1)
        throw std::domain_error("gen_mep: length must be at least 1");
    if (first_symbol > 1)
        throw std::domain_error("gen_mep: first symbol must be 0 or 1");
    std::mt19937_64 engine(seed);
    std::vector<Symbol> bits(len);
    for (auto& b : bits)
        b = static_cast<Symbol>(engine() >> 63);
    bits[0] = first_symbol;
    return {std::move(bits), 2};
}

SymbolSequence gen_zep(std::size_t len, Symbol symbol)
{
    if (len < 1)
        throw std::domain_error("gen_zep: length must be at least 1");
    if (symbol > 1)
        throw std::domain_error("gen_zep: symbol must be 0 or 1");
    return {std::vector<Symbol>(len, symbol), 2};
}

PerturbationSet make_perturbations(std::size_t len, std::uint64_t seed)
{
    PerturbationSet set;
    for (Symbol bit = 0; bit < 2; ++bit)
        set.by_start[bit] = {gen_mep(len, bit, mix64(seed + bit)), gen_zep(len, bit)};
    return set;
}

PerturbationSet complement(const PerturbationSet& set)
{
    PerturbationSet out;
    for (int bit = 0; bit < 2; ++bit) {
        const auto& src = set.by_start[1 - bit];
        out.by_start[bit] = {phic::complement(src.mep), phic::complement(src.zep)};
    }
    return out;
}

}  // namespace phic
