#ifndef WEYLCOH_CATALOG_HPP
#define WEYLCOH_CATALOG_HPP

#include <string>
#include <vector>

#include <weylcoh/sympgroup.hpp>

namespace weylcoh
{

// Rotation of order l in Sp(2): [[c, -s], [s, c]] with c = cos(2 pi / l),
// s = sin(2 pi / l), written exactly in Q(zeta_lcm(l, 4)).
SympMatrix rotation_sp2(int l);
// -Id in Sp(2n).
SympMatrix minus_identity(std::size_t pairs);

// Built-in groups:
//   "trivial"            {Id} in Sp(2)
//   "Z<l>_sp2"           cyclic rotation group, 1 <= l <= 12
//   "pm_sp<2n>"          {+Id, -Id} in Sp(2n), n <= 3 (Z2_sp2 is the same group)
//   "A" "x" "B" ...      direct product, embedded block-diagonally
// Throws UnknownGroup.
GroupPtr catalog_group(const std::string &name, std::size_t cap = default_group_cap);
std::vector<std::string> catalog_base_names();

} // namespace weylcoh

#endif
