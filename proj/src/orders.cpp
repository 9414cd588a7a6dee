#include "convord/orders.hpp"

#include <algorithm>

namespace convord {

RowOrder::RowOrder(const CartanData& c, RowParam rows) : cartan_(c), rows_(std::move(rows)) {
    validate_rows(cartan_, rows_);
    for (int i = 1; i <= rows_.chain.rows(); ++i) {
        sets_.emplace_back(cartan_, chain_level_param(cartan_, rows_.chain, i));
        auto wK = decompose_coset(cartan_, rows_.chain.J, rows_.chain.K_chain[size_t(i - 1)],
                                  rows_.chain.w)
                      .first;
        AffineWeylElement y_prev =
            i == 1 ? affine_identity(cartan_) : rows_.chain.y_chain[size_t(i - 2)];
        transforms_.push_back(mul(affine_of(wK), y_prev));
        inverses_.push_back(inverse_element(cartan_, transforms_.back()));
    }
}

bool RowOrder::contains(const Root& beta) const { return sets_.back().contains(beta); }

std::pair<int, Int> RowOrder::position_of(const Root& beta) const {
    auto it = positions_.find(beta);
    if (it != positions_.end()) return it->second;
    int row = 0;
    for (int i = 0; i < num_rows(); ++i)
        if (sets_[size_t(i)].contains(beta)) {
            row = i + 1;
            break;
        }
    if (row == 0) throw std::invalid_argument("row_of: root outside the ordered set");
    Root pre = act(cartan_, inverses_[size_t(row - 1)], beta);
    std::pair<int, Int> pos{row, word_index(rows_.words[size_t(row - 1)], pre)};
    positions_.emplace(beta, pos);
    return pos;
}

int RowOrder::row_of(const Root& beta) const { return position_of(beta).first; }

Int RowOrder::index_of(const Root& beta) const { return position_of(beta).second; }

int RowOrder::compare(const Root& a, const Root& b) const {
    if (a == b) return 0;
    auto pa = position_of(a), pb = position_of(b);
    if (pa == pb) throw std::logic_error("compare: distinct roots share a position");
    return pa < pb ? -1 : 1;
}

std::vector<Root> RowOrder::row_prefix(int row, Int count) const {
    if (row < 1 || row > num_rows()) throw std::invalid_argument("row_prefix: bad row");
    std::vector<Root> out;
    for (Int p = 1; p <= count; ++p) {
        auto [z, phi] = word_prefix_products(rows_.words[size_t(row - 1)], p);
        out.push_back(act(cartan_, transforms_[size_t(row - 1)], phi));
    }
    return out;
}

Int ImaginaryOrder::position(Int level) const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == level) return Int(i);
    return level - 1;  // identity beyond the listed block
}

int ImaginaryOrder::compare(Int a, Int b) const {
    Int pa = position(a), pb = position(b);
    if (pa == pb) return 0;
    return pa < pb ? -1 : 1;
}

int zone_of(const OrderSpec& spec, const Root& beta) {
    if (!is_positive(spec.cartan, beta)) throw std::invalid_argument("zone_of: not a positive root");
    if (is_imaginary_root(spec.cartan, beta)) return 1;
    if (!is_real_root(spec.cartan, beta)) throw std::invalid_argument("zone_of: not a root");
    return spec.negative.contains(beta) ? 0 : 2;
}

int full_compare(const OrderSpec& spec, const Root& a, const Root& b) {
    if (a == b) return 0;
    int za = zone_of(spec, a), zb = zone_of(spec, b);
    if (za != zb) return za < zb ? -1 : 1;
    switch (za) {
        case 0:
            return spec.negative.compare(a, b);
        case 1:
            return spec.imaginary.compare(a.level, b.level);
        default:
            return -spec.positive.compare(a, b);  // opposite order on the plus side
    }
}

Comparator comparator_of(const OrderSpec& spec) {
    return [&spec](const Root& a, const Root& b) { return full_compare(spec, a, b); };
}

OrderSpec assemble_order(const CartanData& c, const FiniteWeylElement& w, RowParam negative,
                         ImaginaryOrder imaginary, RowParam positive) {
    auto Ifull = full_index_set(c);
    if (negative.chain.J != Ifull || positive.chain.J != Ifull)
        throw std::invalid_argument("build_order: zone rows must cover the full index set");
    if (!(negative.chain.w == w))
        throw std::invalid_argument("build_order: negative zone must be over w");
    auto w0 = longest_element(c, Ifull);
    if (!(positive.chain.w == w * w0))
        throw std::invalid_argument("build_order: positive zone must be over w * w0");
    std::set<Int> seen(imaginary.perm.begin(), imaginary.perm.end());
    if (seen.size() != imaginary.perm.size())
        throw std::invalid_argument("build_order: imaginary permutation repeats a level");
    for (Int m : imaginary.perm)
        if (m < 1 || m > Int(imaginary.perm.size()))
            throw std::invalid_argument("build_order: imaginary permutation must cover 1..k");
    return OrderSpec{c, w, RowOrder(c, std::move(negative)), std::move(imaginary),
                     RowOrder(c, std::move(positive))};
}

OrderSpec build_order(const CartanData& c, const FiniteWeylElement& w, RowParam negative,
                      ImaginaryOrder imaginary, RowParam positive, Window verify_window) {
    OrderSpec spec = assemble_order(c, w, std::move(negative), std::move(imaginary),
                                    std::move(positive));
    auto window = positive_window(c, full_index_set(c), verify_window, true);
    auto rep = verify_convex_order(
        c, comparator_of(spec), [](const Root&) { return true; }, window, verify_window);
    if (!rep.ok) throw std::runtime_error("build_order: assembled order fails " + rep.condition);
    return spec;
}

VerifyReport verify_convex_order(const CartanData& c, const Comparator& cmp, const Membership& inB,
                                 const std::vector<Root>& ambient_window, Window w) {
    VerifyReport rep;
    rep.window = w.max_level;
    std::set<Root> ambient(ambient_window.begin(), ambient_window.end());
    std::vector<Root> members;
    for (const auto& r : ambient_window)
        if (inB(r)) members.push_back(r);
    std::set<Root> member_set(members.begin(), members.end());

    auto fail = [&](const char* cond, const Root& b, const Root& g, const Root& s) {
        if (!rep.ok) return;
        rep.ok = false;
        rep.condition = cond;
        rep.beta = b;
        rep.gamma = g;
        rep.sum = s;
    };

    // CO(i): beta, gamma in B not both imaginary, sum in B: beta < sum < gamma.
    for (size_t i = 0; i < members.size() && rep.ok; ++i) {
        for (size_t j = i + 1; j < members.size() && rep.ok; ++j) {
            const Root &x = members[i], &y = members[j];
            if (is_imaginary_root(c, x) && is_imaginary_root(c, y)) continue;
            Root sum = x + y;
            if (!is_root(c, sum)) continue;
            if (sum.level > w.max_level) {
                ++rep.skipped;
                continue;
            }
            if (!member_set.count(sum)) continue;
            ++rep.checked;
            const Root& lo = cmp(x, y) < 0 ? x : y;
            const Root& hi = cmp(x, y) < 0 ? y : x;
            if (!(cmp(lo, sum) < 0 && cmp(sum, hi) < 0)) fail("CO(i)", lo, hi, sum);
        }
    }
    // CO(ii): beta in B, gamma in ambient \ B, sum in B: beta < sum.
    for (const auto& x : members) {
        if (!rep.ok) break;
        for (const auto& g : ambient_window) {
            if (member_set.count(g)) continue;
            Root sum = x + g;
            if (!is_root(c, sum)) continue;
            if (sum.level > w.max_level) {
                ++rep.skipped;
                continue;
            }
            if (!member_set.count(sum)) continue;
            ++rep.checked;
            if (!(cmp(x, sum) < 0)) {
                fail("CO(ii)", x, g, sum);
                break;
            }
        }
    }
    return rep;
}

Comparator splice_orders(const CartanData& c, const AffineWeylElement& y, const Comparator& on_phi,
                         const Comparator& on_B, const Membership& inB,
                         const std::vector<Root>& ambient_window, Window w) {
    auto phi = inversion_set(c, y);
    std::set<Root> phiset(phi.begin(), phi.end());
    auto phi_rep = verify_convex_order(
        c, on_phi, [&](const Root& r) { return phiset.count(r) > 0; }, ambient_window, w);
    if (!phi_rep.ok) throw std::invalid_argument("splice_orders: order on Phi(y) fails " +
                                                 phi_rep.condition);
    auto b_rep = verify_convex_order(c, on_B, inB, ambient_window, w);
    if (!b_rep.ok) throw std::invalid_argument("splice_orders: order on B fails " + b_rep.condition);

    AffineWeylElement yinv = inverse_element(c, y);
    CartanData cart = c;
    auto spliced = [=](const Root& a, const Root& b) -> int {
        bool pa = phiset.count(a) > 0, pb = phiset.count(b) > 0;
        if (pa && pb) return on_phi(a, b);
        if (pa) return -1;
        if (pb) return 1;
        return on_B(act(cart, yinv, a), act(cart, yinv, b));
    };
    auto member = [=](const Root& r) -> bool {
        if (phiset.count(r)) return true;
        Root pre = act(cart, yinv, r);
        return is_positive(cart, pre) && inB(pre);
    };
    auto rep = verify_convex_order(c, spliced, member, ambient_window, w);
    if (!rep.ok) throw std::runtime_error("splice_orders: spliced order fails " + rep.condition);
    return spliced;
}

Comparator restrict_order(const Comparator& cmp, const Membership& member) {
    return [cmp, member](const Root& a, const Root& b) -> int {
        if (!member(a) || !member(b))
            throw std::invalid_argument("restricted comparator used outside its set");
        return cmp(a, b);
    };
}

std::vector<Root> enumerate_prefix(const RowOrder& order, Int count) {
    return order.row_prefix(1, count);
}

std::vector<Root> enumerate_prefix(const OrderSpec& spec, Int count) {
    return spec.negative.row_prefix(1, count);
}

std::vector<Root> window_listing(const OrderSpec& spec, Window w) {
    auto roots = positive_window(spec.cartan, full_index_set(spec.cartan), w, true);
    std::sort(roots.begin(), roots.end(),
              [&](const Root& a, const Root& b) { return full_compare(spec, a, b) < 0; });
    return roots;
}

}  // namespace convord
