#include "solenoid/lie/parse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "solenoid/error.hpp"

namespace solenoid::lie {

namespace {

Rational parse_rational(const std::string& token, const std::string& where) {
    Rational q;
    const bool ok = token.find_first_not_of("+-0123456789/") == std::string::npos &&
                    q.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0 && sgn(q.get_den()) != 0;
    if (!ok) throw invalid_input(where + ": not a rational number '" + token + "'");
    q.canonicalize();
    return q;
}

std::size_t parse_index(const std::string& token, const std::string& where) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_input(where + ": bad index '" + token + "'");
    const unsigned long v = std::stoul(token);
    if (v == 0 || v > kMaxDimension) throw invalid_input(where + ": index out of range '" + token + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace

LieAlgebraSpec parse_structure_constants(std::istream& in) {
    std::vector<StructureConstant> constants;
    std::vector<std::string> names;
    std::size_t dim = 0;
    std::size_t max_index = 0;

    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(number);

        if (tokens[0] == "dim") {
            if (tokens.size() != 2) throw invalid_input(where + ": expected 'dim N'");
            dim = parse_index(tokens[1], where);
        } else if (tokens[0] == "names") {
            names.assign(tokens.begin() + 1, tokens.end());
        } else {
            if (tokens.size() != 4) throw invalid_input(where + ": expected 'i j k p/q'");
            const std::size_t i = parse_index(tokens[0], where);
            const std::size_t j = parse_index(tokens[1], where);
            const std::size_t k = parse_index(tokens[2], where);
            max_index = std::max({max_index, i, j, k});
            constants.push_back({i - 1, j - 1, k - 1, parse_rational(tokens[3], where)});
        }
    }
    if (dim == 0) dim = names.empty() ? max_index : names.size();
    if (dim == 0) throw invalid_input("no structure constants and no dimension given");
    if (max_index > dim) throw invalid_input("index exceeds the declared dimension");
    return make_algebra(dim, names, constants);
}

LieAlgebraSpec load_structure_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    return parse_structure_constants(in);
}

}  // namespace solenoid::lie
