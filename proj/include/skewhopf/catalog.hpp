#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewhopf/skew_pbw.hpp"

namespace skewhopf {

using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntry {
    std::string name;
    std::string summary;
};

const std::vector<CatalogEntry>& catalog_entries();
Presentation catalog(const std::string& name, const CatalogParams& params = {});

// Incremental construction of a presentation from string data.
class PresentationBuilder {
public:
    PresentationBuilder(std::string name, Field field, std::vector<std::string> gens = {},
                        std::vector<bool> laurent = {});

    PresentationBuilder& vars(std::vector<std::string> v);
    // one image per coefficient generator, in declaration order
    PresentationBuilder& sigma(const std::string& var, const std::map<std::string, std::string>& images);
    PresentationBuilder& delta(const std::string& var, const std::map<std::string, std::string>& images);
    // p*u*v - q*v*u = rhs, with rhs of degree at most one in the variables
    PresentationBuilder& relation(const std::string& u, const std::string& v, const std::string& p,
                                  const std::string& q, const std::string& rhs);
    PresentationBuilder& flags(PresentationFlags f);
    Presentation build() const;

    const CoeffRing& ring() const { return ring_; }
    RElem relem(const std::string& s) const { return parse_relem(ring_, s); }

private:
    std::string name_;
    CoeffRing ring_;
    std::vector<std::string> vars_;
    std::map<std::string, std::map<std::string, std::string>> sigma_, delta_;
    RelationMap rels_;
    PresentationFlags flags_;
    int index(const std::string& v) const;
};

// Linear form sum a_k x_k + c parsed from an expression in the variables.
struct LinearForm {
    std::vector<RElem> linear;
    RElem constant;
};
LinearForm parse_linear(const CoeffRing& r, const std::vector<std::string>& vars, const std::string& text);

}  // namespace skewhopf
