#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One crossing X(a,b,c,d): the four arc labels counterclockwise, starting
// at the incoming under-strand. The under-strand runs a -> c; the
// over-strand runs d -> b at a positive crossing and b -> d at a negative
// one. See docs/pd-codes.md for the picture.
struct Crossing {
    int a = 0, b = 0, c = 0, d = 0;

    bool operator==(const Crossing&) const = default;
};

// An oriented knot diagram with arcs labeled 1..2n consecutively along
// the knot. Immutable after construction. Labels being consecutive makes
// the component count 1 automatically, so link diagrams are rejected at
// validation (smoothed multi-component states live inside the skein
// engine, never here).
class KnotDiagram {
public:
    KnotDiagram() = default;  // 0-crossing unknot

    explicit KnotDiagram(std::vector<Crossing> x) : x_(std::move(x)) {
        validate();
    }

    int size() const { return (int)x_.size(); }
    int arcs() const { return 2 * size(); }
    const Crossing& operator[](int i) const { return x_[i]; }
    const std::vector<Crossing>& crossings() const { return x_; }

    // +1 if the over-strand runs d -> b, else -1.
    int sign(int i) const {
        const Crossing& x = x_[i];
        int N = arcs();
        // One crossing means a kink, where both label tests hold mod 2.
        // The loop arc leaves the under-strand at c and re-enters at the
        // over-in port, so c == d is the positive kink.
        if (size() == 1) return x.c == x.d ? 1 : -1;
        if (x.b % N == (x.d + 1) % N) return 1;
        return -1;
    }

    int writhe() const {
        int w = 0;
        for (int i = 0; i < size(); ++i) w += sign(i);
        return w;
    }

    // Switch every crossing over<->under. The tuple is rotated so the
    // first slot stays the incoming under-strand; applying it twice
    // gives back the identical tuples.
    KnotDiagram mirrored() const {
        std::vector<Crossing> out;
        out.reserve(x_.size());
        for (int i = 0; i < size(); ++i) {
            const Crossing& x = x_[i];
            if (sign(i) > 0)
                out.push_back({x.d, x.a, x.b, x.c});
            else
                out.push_back({x.b, x.c, x.d, x.a});
        }
        return KnotDiagram(std::move(out));
    }

    std::string str() const {
        std::string s = "PD[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            const Crossing& x = x_[i];
            s += "X(" + std::to_string(x.a) + "," + std::to_string(x.b) +
                 "," + std::to_string(x.c) + "," + std::to_string(x.d) + ")";
        }
        s += "]";
        return s;
    }

    bool operator==(const KnotDiagram&) const = default;

private:
    void validate() const {
        int n = size();
        int N = 2 * n;
        std::vector<int> uses(N + 1, 0);
        for (const Crossing& x : x_)
            for (int v : {x.a, x.b, x.c, x.d}) {
                if (v < 1 || v > N)
                    throw ValidationError(
                        "arc label " + std::to_string(v) +
                        " outside 1.." + std::to_string(N));
                ++uses[v];
            }
        for (int v = 1; v <= N; ++v)
            if (uses[v] != 2)
                throw ValidationError("arc label " + std::to_string(v) +
                                      " appears " + std::to_string(uses[v]) +
                                      " times (want 2)");
        for (const Crossing& x : x_) {
            if (x.c % N != (x.a + 1) % N)
                throw ValidationError(
                    "under-strand labels not consecutive at X(" +
                    std::to_string(x.a) + "," + std::to_string(x.b) + "," +
                    std::to_string(x.c) + "," + std::to_string(x.d) +
                    "); links and scrambled labelings are not accepted");
            bool pos = x.b % N == (x.d + 1) % N;
            bool neg = x.d % N == (x.b + 1) % N;
            if (!pos && !neg)
                throw ValidationError(
                    "over-strand labels not consecutive at X(" +
                    std::to_string(x.a) + "," + std::to_string(x.b) + "," +
                    std::to_string(x.c) + "," + std::to_string(x.d) + ")");
        }
    }

    std::vector<Crossing> x_;
};

// Parses "PD[X(1,4,2,5),X(3,8,4,1),...]". Whitespace is allowed between
// tokens; the crossing list may be empty. Grammar in docs/pd-codes.md.
inline KnotDiagram parse_pd(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' at offset " +
                             std::to_string(pos));
        ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            ++pos;
        if (pos == start)
            throw ParseError("expected integer at offset " +
                             std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    };

    skip_ws();
    if (text.compare(pos, 2, "PD") != 0)
        throw ParseError("input does not start with PD");
    pos += 2;
    expect('[');
    std::vector<Crossing> xs;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] != 'X')
                throw ParseError("expected crossing 'X(' at offset " +
                                 std::to_string(pos));
            ++pos;
            expect('(');
            Crossing x;
            x.a = read_int();
            expect(',');
            x.b = read_int();
            expect(',');
            x.c = read_int();
            expect(',');
            x.d = read_int();
            expect(')');
            xs.push_back(x);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
    }
    skip_ws();
    if (pos != text.size())
        throw ParseError("trailing characters after PD code");
    return KnotDiagram(std::move(xs));
}

}  // namespace ccs
