#pragma once

#include <string>
#include <vector>

#include "skewhopf/report.hpp"
#include "skewhopf/scalar.hpp"
#include "skewhopf/skew_pbw.hpp"

namespace skewhopf {

// [x_i, x_j] = sum_k bracket[i][j][k] x_k
struct LieData {
    Field field = rationals();
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<Scalar>>> bracket;

    size_t dim() const { return names.size(); }
    static LieData abelian(Field f, std::vector<std::string> names);
    // sets [x_i,x_j] = v and [x_j,x_i] = -v
    void set(int i, int j, const std::vector<Scalar>& v);
    std::vector<Scalar> apply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

// alternating form f(x_i, x_j)
struct LieCocycle {
    std::vector<std::vector<Scalar>> values;

    static LieCocycle zero(Field f, size_t n);
    void set(int i, int j, const Scalar& v);
    Scalar apply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

Report check_lie(const LieData& g);
Report check_cocycle(const LieData& g, const LieCocycle& f);

// U_f(g): x_j x_i = x_i x_j + [x_j, x_i] + f(x_j, x_i)
Presentation sridharan_presentation(const LieData& g, const LieCocycle& f, const std::string& name = "sridharan");

// the (g, f) pair behind a row of the three-dimensional classification table
std::pair<LieData, LieCocycle> sridharan_table1_data(int type, const Scalar& alpha = Scalar(2));

}  // namespace skewhopf
