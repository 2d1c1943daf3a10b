// Seeded generators for small programs, clause sets and literal sets.
#pragma once

#include "smasp/core.hpp"

#include <random>
#include <string>
#include <vector>

namespace smasp::testing {

using Rng = std::mt19937;

struct ProgramShape {
    int atoms = 6;
    int max_rules = 10;
    int max_body = 3;
    bool negneg = true;
    bool constraints = true;
    double fact_rate = 0.15;
    double constraint_rate = 0.15;
};

inline std::vector<Atom> atom_pool(int n) {
    std::vector<Atom> out;
    for (int i = 0; i < n; ++i) {
        out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    }
    return out;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Body random_body(Rng& rng, const std::vector<Atom>& pool, int size, bool negneg) {
    Body b;
    for (int i = 0; i < size; ++i) {
        const auto& a = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
        switch (uniform(rng, 0, negneg ? 2 : 1)) {
        case 0:
            b.pos.insert(a);
            break;
        case 1:
            b.neg.insert(a);
            break;
        default:
            b.negneg.insert(a);
            break;
        }
    }
    return b;
}

inline Program random_program(Rng& rng, const ProgramShape& shape) {
    auto pool = atom_pool(shape.atoms);
    Program pi;
    int n = uniform(rng, 0, shape.max_rules);
    for (int i = 0; i < n; ++i) {
        if (shape.constraints && chance(rng, shape.constraint_rate)) {
            pi.rules.emplace_back(std::nullopt, random_body(rng, pool, uniform(rng, 1, shape.max_body), shape.negneg));
            continue;
        }
        Atom head = pool[static_cast<std::size_t>(uniform(rng, 0, shape.atoms - 1))];
        int size = chance(rng, shape.fact_rate) ? 0 : uniform(rng, 1, shape.max_body);
        pi.rules.emplace_back(head, random_body(rng, pool, size, shape.negneg));
    }
    return pi;
}

inline ClauseSet random_clauses(Rng& rng, const std::vector<Atom>& pool, int max_clauses, int max_len) {
    ClauseSet f;
    int n = uniform(rng, 0, max_clauses);
    for (int i = 0; i < n; ++i) {
        std::vector<Literal> lits;
        int len = uniform(rng, 1, max_len);
        for (int j = 0; j < len; ++j) {
            const auto& a = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
            lits.push_back(Literal{a, chance(rng, 0.5)});
        }
        f.insert(Clause(std::move(lits)));
    }
    return f;
}

// Each atom is left out, made true or made false with equal odds.
inline LiteralSet random_consistent_literals(Rng& rng, const std::vector<Atom>& pool) {
    LiteralSet m;
    for (const auto& a : pool) {
        switch (uniform(rng, 0, 2)) {
        case 1:
            m.insert(pos(a));
            break;
        case 2:
            m.insert(neg(a));
            break;
        default:
            break;
        }
    }
    return m;
}

} // namespace smasp::testing
