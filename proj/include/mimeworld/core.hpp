#pragma once

#include <compare>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mimeworld {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Broken internal invariant; maps to exit code 3 in the CLI.
struct InvariantViolation : Error {
    using Error::Error;
};

struct UndecomposableConcept : Error {
    using Error::Error;
};

struct ForeignEncoding : Error {
    using Error::Error;
};

struct CyclicConstraints : Error {
    using Error::Error;
};

struct EmptySelection : Error {
    using Error::Error;
};

struct NoCandidates : Error {
    using Error::Error;
};

struct MalformedMime : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct BudgetExhausted : Error {
    using Error::Error;
};

struct SpaceTooLarge : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Identifiers
// ---------------------------------------------------------------------------

using ConceptId = std::uint16_t;
using EntityId = std::uint32_t;
using AgentId = EntityId;

// Entity id 0 is reserved: every agent reads it as "me".
inline constexpr EntityId kSelfEntity = 0;

struct Cell {
    int x = 0;
    int y = 0;

    auto operator<=>(const Cell&) const = default;
};

// Cells live in the entity-id space so facts can point at places the same
// way they point at things. High bit tags the encoding; 15 bits per axis.
inline constexpr EntityId kCellIdBit = 0x80000000u;

inline EntityId cell_id(Cell c) {
    if (c.x < 0 || c.y < 0 || c.x >= (1 << 15) || c.y >= (1 << 15))
        throw InvariantViolation("cell coordinates out of encodable range");
    return kCellIdBit | (static_cast<EntityId>(c.y) << 15) |
           static_cast<EntityId>(c.x);
}

inline bool is_cell_id(EntityId id) { return (id & kCellIdBit) != 0; }

inline Cell cell_of(EntityId id) {
    if (!is_cell_id(id)) throw InvariantViolation("not a cell id");
    return Cell{static_cast<int>(id & 0x7FFF),
                static_cast<int>((id >> 15) & 0x7FFF)};
}

// ---------------------------------------------------------------------------
// Facts
// ---------------------------------------------------------------------------

// The object slot of a fact: a thing (entity or cell), a concept, or nothing
// for intransitive predicates.
struct Term {
    enum class Tag : std::uint8_t { none = 0, entity = 1, concept = 2 };

    Tag tag = Tag::none;
    std::uint32_t value = 0;

    static Term none() { return Term{}; }
    static Term entity(EntityId e) { return Term{Tag::entity, e}; }
    static Term concept(ConceptId c) { return Term{Tag::concept, c}; }
    static Term cell(Cell c) { return Term{Tag::entity, cell_id(c)}; }

    bool is_none() const { return tag == Tag::none; }
    bool is_entity() const { return tag == Tag::entity; }
    bool is_concept() const { return tag == Tag::concept; }

    auto operator<=>(const Term&) const = default;
};

// Receiver-independent fact triple with a confidence weight. This is the
// common vocabulary-level currency exchanged between an agent's systems; the
// agent-private encoding lives in PrivateFact.
struct CanonicalFact {
    EntityId subject = 0;
    ConceptId predicate = 0;
    Term object = Term::none();
    double confidence = 1.0;

    // Identity is the triple; confidence is a weight on it.
    auto triple() const { return std::tie(subject, predicate, object); }

    friend bool operator==(const CanonicalFact& a, const CanonicalFact& b) {
        return a.subject == b.subject && a.predicate == b.predicate &&
               a.object == b.object && a.confidence == b.confidence;
    }
    friend auto operator<=>(const CanonicalFact& a, const CanonicalFact& b) {
        if (auto c = a.subject <=> b.subject; c != 0) return c;
        if (auto c = a.predicate <=> b.predicate; c != 0) return c;
        if (auto c = a.object <=> b.object; c != 0) return c;
        return a.confidence <=> b.confidence;
    }
};

inline bool same_triple(const CanonicalFact& a, const CanonicalFact& b) {
    return a.subject == b.subject && a.predicate == b.predicate &&
           a.object == b.object;
}

// ---------------------------------------------------------------------------
// Bytes
// ---------------------------------------------------------------------------

using Bytes = std::vector<std::uint8_t>;

inline void put_u8(Bytes& b, std::uint8_t v) { b.push_back(v); }

inline void put_u16le(Bytes& b, std::uint16_t v) {
    b.push_back(static_cast<std::uint8_t>(v & 0xFF));
    b.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void put_u32le(Bytes& b, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_u64le(Bytes& b, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

struct ByteReader {
    const Bytes& data;
    std::size_t pos = 0;

    bool done() const { return pos == data.size(); }

    std::uint8_t u8() {
        if (pos + 1 > data.size()) throw MalformedMime("truncated payload");
        return data[pos++];
    }
    std::uint16_t u16le() {
        if (pos + 2 > data.size()) throw MalformedMime("truncated payload");
        std::uint16_t v = static_cast<std::uint16_t>(data[pos]) |
                          static_cast<std::uint16_t>(data[pos + 1]) << 8;
        pos += 2;
        return v;
    }
    std::uint32_t u32le() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        return v;
    }
};

// ---------------------------------------------------------------------------
// Hashing and seeded substreams
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = kFnvOffset) {
    auto p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = kFnvOffset) {
    return fnv1a(s.data(), s.size(), h);
}

inline std::uint64_t fnv1a(const Bytes& b, std::uint64_t h = kFnvOffset) {
    return fnv1a(b.data(), b.size(), h);
}

// splitmix64 finalizer; bijective on 64-bit values.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Small deterministic generator; every random draw in the project flows from
// a root seed through named substreams of this.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    double unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return unit() < p; }

    // Named substream: independent child generator.
    Rng fork(const std::string& name) const {
        return Rng(mix64(state_ ^ fnv1a(name)));
    }

  private:
    std::uint64_t state_;
};

inline constexpr int kDirCount = 4;

// Tie-break order everywhere: N < E < S < W.
enum class Dir : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline Cell shifted(Cell c, Dir d) {
    switch (d) {
        case Dir::N: return {c.x, c.y - 1};
        case Dir::E: return {c.x + 1, c.y};
        case Dir::S: return {c.x, c.y + 1};
        case Dir::W: return {c.x - 1, c.y};
    }
    throw InvariantViolation("bad direction");
}

inline const char* dir_name(Dir d) {
    switch (d) {
        case Dir::N: return "N";
        case Dir::E: return "E";
        case Dir::S: return "S";
        case Dir::W: return "W";
    }
    return "?";
}

inline std::optional<Dir> dir_from_name(const std::string& s) {
    if (s == "N") return Dir::N;
    if (s == "E") return Dir::E;
    if (s == "S") return Dir::S;
    if (s == "W") return Dir::W;
    return std::nullopt;
}

}  // namespace mimeworld
