#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "supersat/errors.hpp"
#include "supersat/family.hpp"

namespace supersat {

// Family text format:
//   # optional comment lines
//   n=<n> k=<k>
//   e1 e2 ... ek        (one member per line, increasing 1-based elements)
// Emitted files contain the header followed by the members in insertion
// order and round-trip bit-exactly.

struct FamilyHeader {
    int n = 0;
    int k = 0;
};

/// Reads up to and including the header line; comments and blanks may precede it.
inline FamilyHeader read_family_header(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        FamilyHeader h;
        char trailing = 0;
        if (std::sscanf(line.c_str(), "n=%d k=%d %c", &h.n, &h.k, &trailing) != 2)
            throw UsageError("expected header 'n=<n> k=<k>', got: " + line);
        return h;
    }
    throw UsageError("missing family header 'n=<n> k=<k>'");
}

template <std::size_t W>
BasicFamily<W> read_family(std::istream& in) {
    FamilyHeader h = read_family_header(in);
    BasicFamily<W> fam(h.n, h.k);
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        BasicSet<W> s(h.n);
        int e = 0, prev = 0, count = 0;
        while (ls >> e) {
            if (e <= prev)
                throw UsageError("elements must be strictly increasing (line " +
                                 std::to_string(lineno) + ")");
            s.insert(e);
            prev = e;
            ++count;
        }
        if (!ls.eof())
            throw UsageError("malformed set line " + std::to_string(lineno) + ": " + line);
        if (count != h.k)
            throw UsageError("set on line " + std::to_string(lineno) + " has " +
                             std::to_string(count) + " elements, expected k=" +
                             std::to_string(h.k));
        if (!fam.insert(s))
            throw UsageError("duplicate member on line " + std::to_string(lineno));
    }
    return fam;
}

template <std::size_t W>
void write_family(std::ostream& out, const BasicFamily<W>& f) {
    out << "n=" << f.ground() << " k=" << f.uniformity() << "\n";
    for (const auto& m : f) {
        bool first = true;
        for (int e : m.elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << "\n";
    }
}

template <std::size_t W>
std::string family_to_string(const BasicFamily<W>& f) {
    std::ostringstream os;
    write_family(os, f);
    return os.str();
}

template <std::size_t W>
BasicFamily<W> family_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_family<W>(is);
}

/// Writes via a temp file in the same directory, then renames into place.
inline void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot open for writing: " + tmp.string());
        out << content;
        if (!out) throw UsageError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

template <std::size_t W>
void save_family(const std::filesystem::path& path, const BasicFamily<W>& f) {
    atomic_write_file(path, family_to_string(f));
}

template <std::size_t W>
BasicFamily<W> load_family(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open family file: " + path.string());
    return read_family<W>(in);
}

/// Peeks just the header of a family file (to pick a bitset width).
inline FamilyHeader load_family_header(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open family file: " + path.string());
    return read_family_header(in);
}

} // namespace supersat
