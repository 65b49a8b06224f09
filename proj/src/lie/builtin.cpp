#include "solenoid/lie/builtin.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid::lie {

namespace {

void require_range(std::string_view name, int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw invalid_input(std::string(name) + " needs n in " + std::to_string(lo) + ".." + std::to_string(hi));
}

// Index of e_ij (i < j, 1-based) among the basis of strictly upper
// triangular n x n matrices in lexicographic order.
std::size_t ut_index(int n, int i, int j) {
    std::size_t idx = 0;
    for (int a = 1; a < i; ++a) idx += static_cast<std::size_t>(n - a);
    return idx + static_cast<std::size_t>(j - i - 1);
}

RVector unit(std::size_t n, std::size_t i) {
    RVector e(n);
    e[i] = 1;
    return e;
}

std::vector<TwoVector> commuting_basis_pairs(const LieAlgebraSpec& alg) {
    std::vector<TwoVector> out;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (is_zero(alg.bracket_basis(i, j))) out.push_back(wedge(unit(n, i), unit(n, j)));
    return out;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"heisenberg", "g2n1", "upper_triangular", "sol", "sol_x_r", "abelian"};
}

bool builtin_needs_n(std::string_view name) { return name != "sol" && name != "sol_x_r"; }

LieAlgebraSpec builtin_algebra(std::string_view name, int n) {
    std::vector<StructureConstant> c;
    std::vector<std::string> names;

    if (name == "heisenberg" || name == "g2n1") {
        require_range(name, n, 1, 10);
        const auto m = static_cast<std::size_t>(n);
        for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
        for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
        names.push_back("z");
        const std::size_t z = 2 * m;
        for (std::size_t i = 0; i < m; ++i) {
            if (name == "heisenberg")
                c.push_back({i, m + i, z, 1});
            else
                c.push_back({z, i, m + i, 1});
        }
        return make_algebra(2 * m + 1, names, c);
    }
    if (name == "upper_triangular") {
        require_range(name, n, 2, 6);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l) c.push_back({ut_index(n, i, j), ut_index(n, j, l), ut_index(n, i, l), 1});
        return make_algebra(names.size(), names, c);
    }
    if (name == "sol") {
        return make_algebra(3, {"X0", "X1", "U"}, {{2, 0, 0, 1}, {2, 1, 1, -1}});
    }
    if (name == "sol_x_r") {
        return make_algebra(4, {"X0", "X1", "U", "T"}, {{2, 0, 0, 1}, {2, 1, 1, -1}});
    }
    if (name == "abelian") {
        require_range(name, n, 1, static_cast<int>(kMaxDimension));
        return make_algebra(static_cast<std::size_t>(n), {}, {});
    }
    throw invalid_input("unknown algebra '" + std::string(name) + "'");
}

std::vector<TwoVector> builtin_kernel_generators(std::string_view name, int n) {
    const LieAlgebraSpec alg = builtin_algebra(name, n);
    std::vector<TwoVector> out = commuting_basis_pairs(alg);
    const std::size_t dim = alg.dim();

    if (name == "heisenberg") {
        const auto m = static_cast<std::size_t>(n);
        for (std::size_t i = 1; i < m; ++i) {
            RVector a = unit(dim, i);  // x_i + y_1
            a[m] = 1;
            RVector b = unit(dim, 0);  // x_1 + y_i
            b[m + i] = 1;
            out.push_back(wedge(a, b));
        }
    } else if (name == "upper_triangular") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = i + 1; k <= n; ++k)
                    for (int l = std::max(j, k) + 1; l <= n; ++l) {
                        if (j == k) continue;
                        RVector a = unit(dim, ut_index(n, i, j));
                        a[ut_index(n, k, l)] = 1;
                        RVector b = unit(dim, ut_index(n, j, l));
                        b[ut_index(n, i, k)] = 1;
                        out.push_back(wedge(a, b));
                    }
    }
    return out;
}

}  // namespace solenoid::lie
