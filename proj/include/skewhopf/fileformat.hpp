#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewhopf/catalog.hpp"
#include "skewhopf/galois.hpp"
#include "skewhopf/genhopf.hpp"
#include "skewhopf/torsor.hpp"

namespace skewhopf {

class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& msg, int line = 0, int col = 0);
    int line, col;
};

// The subset of TOML used by input files: [dotted."quoted".headers], dotted keys,
// strings, integers, booleans and arrays of those.
struct TomlValue {
    enum class Kind { string, integer, boolean, array };
    Kind kind = Kind::string;
    std::string str;
    long integer = 0;
    bool boolean = false;
    std::vector<TomlValue> items;
    int line = 0, col = 0;

    std::string as_string() const;  // integers and booleans are rendered
    std::vector<std::string> as_strings() const;
};

struct TomlTable {
    std::vector<std::pair<std::string, TomlValue>> entries;  // dotted keys joined with '.'
    int line = 0;

    const TomlValue* find(const std::string& key) const;
    bool has(const std::string& key) const { return find(key) != nullptr; }
    std::string get(const std::string& key, const std::string& def) const;
    std::string require(const std::string& key) const;
    std::map<std::string, std::string> strings() const;
};

struct TomlDoc {
    std::map<std::vector<std::string>, TomlTable> sections;  // root is the empty path

    const TomlTable* find(const std::vector<std::string>& path) const;
    const TomlTable& require(const std::vector<std::string>& path) const;
    // names n with a section prefix.n (or prefix.n.*)
    std::vector<std::string> children(const std::vector<std::string>& prefix) const;
};

TomlDoc toml_parse(const std::string& text);
std::string toml_quote(const std::string& s);

// ---- skew PBW presentations

bool has_presentation(const TomlDoc& d);
Presentation load_presentation(const TomlDoc& d);
std::string write_presentation(const Presentation& p);

// [hopf] with delta.<gen>, epsilon.<gen>, antipode.<gen>, or structure = "enveloping"
bool has_gen_hopf(const TomlDoc& d);
GenHopfSpec load_gen_hopf(const TomlDoc& d, const Presentation& p);
std::string write_gen_hopf(const GenHopfSpec& h);

// ---- finite-dimensional data

// "2 a @ b - c @ d": tokens separated by spaces, labels per factor
SVec parse_combination(Field f, const std::vector<const std::vector<std::string>*>& factors, const std::string& text);
std::string write_combination(const std::vector<const std::vector<std::string>*>& factors, const Space& s,
                              const SVec& v);

FinDimAlg load_algebra(const TomlDoc& d, const std::string& name);
std::string write_algebra(const FinDimAlg& A, const std::string& name);
std::vector<std::string> finite_hopf_names(const TomlDoc& d);
HopfData load_finite_hopf(const TomlDoc& d, const std::string& name);
std::string write_finite_hopf(const HopfData& H, const std::string& name);

struct ComoduleInput {
    ComoduleAlgebra C;
    std::optional<GroupTable> group;  // grading input
    std::vector<size_t> degrees;
};
ComoduleInput load_comodule(const TomlDoc& d);
// "label = expr; label = expr" or a [cleft.<arg>] section
LinMap load_gamma(const TomlDoc& d, const ComoduleAlgebra& C, const std::string& arg);

TorsorData load_torsor(const TomlDoc& d);
// mu on algebra generators, extended to a basis through products of generator words
LinMap extend_from_generators(const FinDimAlg& T, const std::vector<const FinDimAlg*>& target,
                              const std::map<size_t, SVec>& images);

struct HGSInput {
    std::optional<HGSData> finite;
    std::optional<GenHGS> generated;
};
HGSInput load_hgs(const TomlDoc& d);

}  // namespace skewhopf
