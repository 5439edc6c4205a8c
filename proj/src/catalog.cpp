#include <weylcoh/catalog.hpp>

#include <regex>

#include <weylcoh/errors.hpp>

namespace weylcoh
{

namespace
{

struct Generators {
    std::size_t pairs = 1;
    std::vector<SympMatrix> list;
};

Generators base_generators(const std::string &name)
{
    static const std::regex cyclic(R"(Z(\d+)_sp2)");
    static const std::regex pm(R"(pm_sp(\d+))");
    std::smatch m;
    if (name == "trivial") {
        return {1, {SympMatrix::identity(1)}};
    }
    if (std::regex_match(name, m, cyclic)) {
        const int l = std::stoi(m[1].str());
        if (l < 1 || l > 12) {
            throw UnknownGroup("cyclic order must be between 1 and 12: " + name);
        }
        return {1, {rotation_sp2(l)}};
    }
    if (std::regex_match(name, m, pm)) {
        const int d = std::stoi(m[1].str());
        if (d < 2 || d > 6 || d % 2 != 0) {
            throw UnknownGroup("pm_sp<2n> needs 1 <= n <= 3: " + name);
        }
        const std::size_t n = static_cast<std::size_t>(d / 2);
        return {n, {minus_identity(n)}};
    }
    throw UnknownGroup("no catalog group named '" + name + "'");
}

} // namespace

SympMatrix rotation_sp2(int l)
{
    if (l < 1) {
        throw std::invalid_argument("rotation order must be positive");
    }
    const Cyclotomic z = Cyclotomic::root_of_unity(l, 1);
    const Cyclotomic zi = Cyclotomic::root_of_unity(l, -1);
    const Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic c = (z + zi) / Cyclotomic(2);
    const Cyclotomic s = (z - zi) / (Cyclotomic(2) * i4);
    Matrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return SympMatrix::from_matrix(m);
}

SympMatrix minus_identity(std::size_t pairs)
{
    return SympMatrix::from_matrix(Matrix::scalar(2 * pairs, Cyclotomic(-1)));
}

std::vector<std::string> catalog_base_names()
{
    std::vector<std::string> names{"trivial"};
    for (int l = 1; l <= 12; ++l) {
        names.push_back("Z" + std::to_string(l) + "_sp2");
    }
    for (int n = 1; n <= 3; ++n) {
        names.push_back("pm_sp" + std::to_string(2 * n));
    }
    return names;
}

GroupPtr catalog_group(const std::string &name, std::size_t cap)
{
    std::vector<Generators> factors;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = name.find('x', start);
        factors.push_back(base_generators(name.substr(start, pos == std::string::npos ? pos : pos - start)));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    if (factors.size() == 1) {
        return FiniteSympGroup::close(factors.front().list, cap, name);
    }
    std::vector<SympMatrix> gens;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        for (const auto &g : factors[f].list) {
            std::vector<SympMatrix> blocks;
            for (std::size_t o = 0; o < factors.size(); ++o) {
                blocks.push_back(o == f ? g : SympMatrix::identity(factors[o].pairs));
            }
            gens.push_back(direct_sum(blocks));
        }
    }
    return FiniteSympGroup::close(gens, cap, name);
}

} // namespace weylcoh
