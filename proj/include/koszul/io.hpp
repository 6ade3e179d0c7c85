/*
   Copyright 2026 The koszul authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KOSZUL_IO_HPP
#define KOSZUL_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradedmod.hpp"
#include "groebner.hpp"
#include "modvec.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "scalar.hpp"

// Readers and writers for the formats the command line speaks: polynomial
// lists, graded module presentations, free resolutions, and Betti tables.
// The text form is the source of truth; JSON mirrors carry the same fields
// with polynomials as strings in the shared expression syntax.

namespace koszul {

// A parsed input file before any ring or field is chosen.  `vars` comes from
// the leading "ring" line, `shifts` from an optional "shifts" line, and each
// row is the comma-split remainder of one content line.
struct TextInput {
    std::vector<std::string> vars;
    bool has_shifts = false;
    std::vector<long> shifts;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline long parse_long(const std::string& s, std::size_t lineno) {
    if (s.empty())
        throw input_error("empty integer on line " + std::to_string(lineno));
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw input_error("bad integer \"" + s + "\" on line " +
                          std::to_string(lineno));
    }
    if (used != s.size())
        throw input_error("bad integer \"" + s + "\" on line " +
                          std::to_string(lineno));
    return v;
}

}  // namespace detail

// Line oriented text input.  "#" starts a comment, blank lines are skipped,
// the first content line must be "ring <names>", an optional "shifts <ints>"
// line follows, and every later line is one row of comma separated
// polynomial expressions.
inline TextInput parse_input_text(const std::string& text) {
    TextInput in;
    bool saw_ring = false;
    bool past_header = false;
    std::size_t lineno = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        ++lineno;
        std::string line = text.substr(start, i - start);
        start = i + 1;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (!saw_ring) {
            if (line.rfind("ring", 0) != 0 ||
                (line.size() > 4 &&
                 !std::isspace(static_cast<unsigned char>(line[4]))))
                throw input_error("expected a \"ring\" line first, got \"" +
                                  line + "\" on line " + std::to_string(lineno));
            for (const auto& piece : detail::split_commas(line.substr(4))) {
                if (piece.empty())
                    throw input_error("empty variable name on line " +
                                      std::to_string(lineno));
                if (!detail::valid_var_name(piece))
                    throw input_error("bad variable name \"" + piece +
                                      "\" on line " + std::to_string(lineno));
                in.vars.push_back(piece);
            }
            if (in.vars.empty())
                throw input_error("ring line lists no variables on line " +
                                  std::to_string(lineno));
            std::set<std::string> seen(in.vars.begin(), in.vars.end());
            if (seen.size() != in.vars.size())
                throw input_error("duplicate variable name on line " +
                                  std::to_string(lineno));
            saw_ring = true;
            continue;
        }

        if (!past_header && line.rfind("shifts", 0) == 0 &&
            (line.size() == 6 ||
             std::isspace(static_cast<unsigned char>(line[6])))) {
            in.has_shifts = true;
            std::string rest = detail::trim(line.substr(6));
            if (!rest.empty())
                for (const auto& piece : detail::split_commas(rest))
                    in.shifts.push_back(detail::parse_long(piece, lineno));
            past_header = true;
            continue;
        }
        past_header = true;

        std::vector<std::string> row = detail::split_commas(line);
        for (const auto& entry : row)
            if (entry.empty())
                throw input_error("empty entry on line " +
                                  std::to_string(lineno));
        in.rows.push_back(std::move(row));
    }
    if (!saw_ring) throw input_error("input has no \"ring\" line");
    return in;
}

inline RingPtr ring_from_input(const TextInput& in,
                               OrderKind ord = OrderKind::grevlex) {
    return make_ring(in.vars, ord);
}

template <class C>
Poly<C> parse_input_poly(const std::string& text, const RingPtr& ring,
                         const FieldSpec& field) {
    return parse_poly<C>(text, ring, field);
}

// A polynomial list: one expression per line, no shifts header.
template <class C>
std::vector<Poly<C>> polys_from_input(const TextInput& in, const RingPtr& ring,
                                      const FieldSpec& field = FieldSpec::rationals()) {
    if (in.has_shifts)
        throw input_error(
            "expected a polynomial list, found a module presentation");
    std::vector<Poly<C>> out;
    for (const auto& row : in.rows) {
        if (row.size() != 1)
            throw input_error("polynomial lists take one expression per line");
        Poly<C> f = parse_input_poly<C>(row[0], ring, field);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

// A module presentation: the shifts line fixes the generator degrees and each
// later row gives one relation as a full vector of components.
template <class C>
GradedModule<C> module_from_input(const TextInput& in, const RingPtr& ring,
                                  const FieldSpec& field = FieldSpec::rationals(),
                                  const GBOptions& opts = {}) {
    if (!in.has_shifts)
        throw input_error("module input needs a \"shifts\" line");
    const std::uint32_t rank = static_cast<std::uint32_t>(in.shifts.size());
    ModuleOrder ord;
    std::vector<Vec<C>> relations;
    for (const auto& row : in.rows) {
        if (row.size() != in.shifts.size())
            throw input_error("relation row has " + std::to_string(row.size()) +
                              " entries, expected " +
                              std::to_string(in.shifts.size()));
        Vec<C> v;
        v.rank = rank;
        v.ring = ring;
        for (std::uint32_t pos = 0; pos < rank; ++pos) {
            Poly<C> f = parse_input_poly<C>(row[pos], ring, field);
            if (f.is_zero()) continue;
            v = vec_add(v, vec_from_poly(f, rank, pos, ord), ord);
        }
        if (!v.is_zero()) relations.push_back(std::move(v));
    }
    return make_graded_module<C>(ring, in.shifts, std::move(relations), opts);
}

// ---------------------------------------------------------------- writers

namespace detail {

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

inline std::vector<std::string> shift_strings(const std::vector<long>& shifts) {
    std::vector<std::string> out;
    out.reserve(shifts.size());
    for (long s : shifts) out.push_back(std::to_string(s));
    return out;
}

template <class C>
std::vector<std::string> vec_entry_strings(const Vec<C>& v,
                                           std::uint32_t rank) {
    std::vector<std::string> parts;
    parts.reserve(rank);
    for (std::uint32_t pos = 0; pos < rank; ++pos)
        parts.push_back(poly_to_string(vec_component(v, pos)));
    return parts;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return std::string(width - s.size(), ' ') + s;
}

}  // namespace detail

inline std::string ring_line(const RingDescriptor& ring) {
    return "ring " + detail::join(ring.vars, ", ") + "\n";
}

template <class C>
std::string polys_to_text(const RingPtr& ring, const std::vector<Poly<C>>& gens) {
    std::string s = ring_line(*ring);
    for (const auto& f : gens) s += poly_to_string(f) + "\n";
    return s;
}

template <class C>
std::string module_to_text(const GradedModule<C>& m) {
    std::string s = ring_line(*m.ring);
    s += "shifts " + detail::join(detail::shift_strings(m.shifts), ", ") + "\n";
    for (const auto& rel : m.relations)
        s += detail::join(detail::vec_entry_strings(rel, m.rank()), ", ") + "\n";
    return s;
}

template <class C>
std::string resolution_to_text(const FreeResolution<C>& res) {
    std::string s = ring_line(*res.ring);
    for (std::size_t p = 0; p < res.shifts.size(); ++p) {
        s += "step " + std::to_string(p) + ": shifts " +
             detail::join(detail::shift_strings(res.shifts[p]), ", ") + "\n";
        if (p == 0) continue;
        const std::uint32_t rank =
            static_cast<std::uint32_t>(res.shifts[p - 1].size());
        for (const auto& col : res.maps[p - 1])
            s += "  " + detail::join(detail::vec_entry_strings(col, rank), ", ") +
                 "\n";
    }
    return s;
}

// ------------------------------------------------------------- JSON output

inline std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    static const char* hex = "0123456789abcdef";
                    out += "\\u00";
                    out += hex[(c >> 4) & 0xf];
                    out += hex[c & 0xf];
                } else {
                    out += c;
                }
        }
    }
    out += "\"";
    return out;
}

namespace detail {

inline std::string json_string_array(const std::vector<std::string>& parts) {
    std::vector<std::string> quoted;
    quoted.reserve(parts.size());
    for (const auto& p : parts) quoted.push_back(json_quote(p));
    return "[" + join(quoted, ",") + "]";
}

inline std::string json_long_array(const std::vector<long>& vals) {
    std::vector<std::string> parts;
    parts.reserve(vals.size());
    for (long v : vals) parts.push_back(std::to_string(v));
    return "[" + join(parts, ",") + "]";
}

}  // namespace detail

template <class C>
std::string polys_to_json(const RingPtr& ring, const std::vector<Poly<C>>& gens) {
    std::vector<std::string> strs;
    strs.reserve(gens.size());
    for (const auto& f : gens) strs.push_back(poly_to_string(f));
    return "{\"ring\":" + detail::json_string_array(ring->vars) +
           ",\"gens\":" + detail::json_string_array(strs) + "}";
}

template <class C>
std::string module_to_json(const GradedModule<C>& m) {
    std::string s = "{\"ring\":" + detail::json_string_array(m.ring->vars) +
                    ",\"shifts\":" + detail::json_long_array(m.shifts) +
                    ",\"relations\":[";
    for (std::size_t i = 0; i < m.relations.size(); ++i) {
        if (i) s += ",";
        s += detail::json_string_array(
            detail::vec_entry_strings(m.relations[i], m.rank()));
    }
    s += "]}";
    return s;
}

template <class C>
std::string resolution_to_json(const FreeResolution<C>& res) {
    std::string s = "{\"ring\":" + detail::json_string_array(res.ring->vars) +
                    ",\"steps\":[";
    for (std::size_t p = 0; p < res.shifts.size(); ++p) {
        if (p) s += ",";
        s += "{\"shifts\":" + detail::json_long_array(res.shifts[p]) +
             ",\"columns\":[";
        if (p > 0) {
            const std::uint32_t rank =
                static_cast<std::uint32_t>(res.shifts[p - 1].size());
            for (std::size_t c = 0; c < res.maps[p - 1].size(); ++c) {
                if (c) s += ",";
                s += detail::json_string_array(
                    detail::vec_entry_strings(res.maps[p - 1][c], rank));
            }
        }
        s += "]}";
    }
    s += "]}";
    return s;
}

// ------------------------------------------------------------ Betti tables

namespace detail {

struct BettiLayout {
    long pmin = 0, pmax = -1, rmin = 0, rmax = -1;
    std::map<std::pair<long, long>, long> cells;  // (p, row) -> count
    std::vector<long> totals;
    bool empty() const { return pmax < pmin; }
};

inline BettiLayout betti_layout(const BettiTable& t) {
    BettiLayout lay;
    bool first = true;
    for (const auto& [key, count] : t.entries) {
        if (count == 0) continue;
        const auto [p, row] = key;
        if (first) {
            lay.pmin = 0;
            lay.pmax = p;
            lay.rmin = row;
            lay.rmax = row;
            first = false;
        } else {
            lay.pmax = std::max(lay.pmax, p);
            lay.rmin = std::min(lay.rmin, row);
            lay.rmax = std::max(lay.rmax, row);
        }
        lay.cells[{p, row}] += count;
    }
    if (first) return lay;
    lay.totals.assign(static_cast<std::size_t>(lay.pmax + 1), 0);
    for (const auto& [key, count] : lay.cells)
        lay.totals[static_cast<std::size_t>(key.first)] += count;
    return lay;
}

}  // namespace detail

// Rows are indexed by shift minus homological degree, columns by homological
// degree, with a totals row on top and dots for empty cells.
inline std::string betti_text(const BettiTable& t) {
    detail::BettiLayout lay = detail::betti_layout(t);
    if (lay.empty()) return "total: 0\n";

    std::vector<std::string> labels;
    labels.push_back("total:");
    for (long r = lay.rmin; r <= lay.rmax; ++r)
        labels.push_back(std::to_string(r) + ":");
    std::size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());

    std::vector<std::size_t> col_w;
    for (long p = lay.pmin; p <= lay.pmax; ++p) {
        std::size_t w = std::to_string(p).size();
        w = std::max(w, std::to_string(lay.totals[static_cast<std::size_t>(p)])
                            .size());
        for (long r = lay.rmin; r <= lay.rmax; ++r) {
            auto it = lay.cells.find({p, r});
            if (it != lay.cells.end())
                w = std::max(w, std::to_string(it->second).size());
        }
        col_w.push_back(w);
    }

    std::string s = std::string(label_w, ' ');
    for (long p = lay.pmin; p <= lay.pmax; ++p)
        s += "  " + detail::pad_left(std::to_string(p),
                                     col_w[static_cast<std::size_t>(p)]);
    s += "\n";
    s += detail::pad_left("total:", label_w);
    for (long p = lay.pmin; p <= lay.pmax; ++p)
        s += "  " +
             detail::pad_left(
                 std::to_string(lay.totals[static_cast<std::size_t>(p)]),
                 col_w[static_cast<std::size_t>(p)]);
    s += "\n";
    for (long r = lay.rmin; r <= lay.rmax; ++r) {
        s += detail::pad_left(std::to_string(r) + ":", label_w);
        for (long p = lay.pmin; p <= lay.pmax; ++p) {
            auto it = lay.cells.find({p, r});
            std::string cell = it == lay.cells.end()
                                   ? "."
                                   : std::to_string(it->second);
            s += "  " +
                 detail::pad_left(cell, col_w[static_cast<std::size_t>(p)]);
        }
        s += "\n";
    }
    return s;
}

inline std::string betti_csv(const BettiTable& t) {
    detail::BettiLayout lay = detail::betti_layout(t);
    std::string s = "row";
    for (long p = lay.pmin; p <= lay.pmax; ++p)
        s += "," + std::to_string(p);
    s += "\n";
    if (lay.empty()) return s;
    s += "total";
    for (long p = lay.pmin; p <= lay.pmax; ++p)
        s += "," + std::to_string(lay.totals[static_cast<std::size_t>(p)]);
    s += "\n";
    for (long r = lay.rmin; r <= lay.rmax; ++r) {
        s += std::to_string(r);
        for (long p = lay.pmin; p <= lay.pmax; ++p) {
            auto it = lay.cells.find({p, r});
            s += "," + std::to_string(it == lay.cells.end() ? 0 : it->second);
        }
        s += "\n";
    }
    return s;
}

inline std::string betti_json(const BettiTable& t) {
    detail::BettiLayout lay = detail::betti_layout(t);
    std::string s = "{\"columns\":[";
    for (long p = lay.pmin; p <= lay.pmax; ++p) {
        if (p > lay.pmin) s += ",";
        s += std::to_string(p);
    }
    s += "],\"rows\":[";
    if (!lay.empty())
        for (long r = lay.rmin; r <= lay.rmax; ++r) {
            if (r > lay.rmin) s += ",";
            s += std::to_string(r);
        }
    s += "],\"total\":" + detail::json_long_array(lay.totals) + ",\"entries\":[";
    bool first = true;
    for (const auto& [key, count] : lay.cells) {
        if (!first) s += ",";
        first = false;
        s += "{\"p\":" + std::to_string(key.first) +
             ",\"row\":" + std::to_string(key.second) +
             ",\"count\":" + std::to_string(count) + "}";
    }
    s += "]}";
    return s;
}

// ------------------------------------------------------------- rational IO

// Exact rational from "a", "-a", or "a/b" with b positive after reduction.
inline Rat rat_from_string(const std::string& text) {
    std::string s = detail::trim(text);
    if (s.empty()) throw input_error("empty rational");
    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& part, bool sign_ok) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw input_error("bad rational \"" + text + "\"");
    if (num[0] == '+') num = num.substr(1);
    Rat r(num + "/" + den);
    if (r.get_den() == 0) throw input_error("zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

}  // namespace koszul

#endif  // KOSZUL_IO_HPP
