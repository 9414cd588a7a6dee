#pragma once

#include <map>

#include "convord/chains.hpp"

namespace convord {

/// Three-way comparison: negative, zero, positive like strcmp.
using Comparator = std::function<int(const Root&, const Root&)>;
using Membership = std::function<bool(const Root&)>;

/// Comparator engine for the n-row order on Delta_J(w,-) attached to a
/// validated RowParam: a root's position is (row, index within the row word).
/// Word positions are memoized per root, so instances are not safe for
/// unsynchronized concurrent use.
class RowOrder {
  public:
    RowOrder(const CartanData& c, RowParam rows);

    const CartanData& cartan() const { return cartan_; }
    const RowParam& rows() const { return rows_; }
    int num_rows() const { return int(rows_.words.size()); }

    bool contains(const Root& beta) const;
    int row_of(const Root& beta) const;     // 1-based; throws if outside
    Int index_of(const Root& beta) const;   // index within its row word
    int compare(const Root& a, const Root& b) const;
    /// First count elements of the given row, in order.
    std::vector<Root> row_prefix(int row, Int count) const;

  private:
    std::pair<int, Int> position_of(const Root& beta) const;

    CartanData cartan_;
    RowParam rows_;
    std::vector<NablaSet> sets_;                  // C_1 .. C_n
    std::vector<AffineWeylElement> transforms_;   // w^{K_{i-1}} y_{i-1}
    std::vector<AffineWeylElement> inverses_;
    mutable std::map<Root, std::pair<int, Int>> positions_;
};

/// Total order on the positive imaginary roots: the listed levels come first
/// in the listed order, all remaining levels follow in natural order.
struct ImaginaryOrder {
    std::vector<Int> perm;

    Int position(Int level) const;
    int compare(Int a, Int b) const;
};

/// Assembled order on the full positive system:
/// Delta(w,-) before the imaginaries before Delta(w,+), the positive side
/// being the reverse of a row order on Delta(w w0, -).
struct OrderSpec {
    CartanData cartan;
    FiniteWeylElement w;
    RowOrder negative;
    ImaginaryOrder imaginary;
    RowOrder positive;
};

/// Zone of a positive root: 0 negative side, 1 imaginary, 2 positive side.
int zone_of(const OrderSpec& spec, const Root& beta);

int full_compare(const OrderSpec& spec, const Root& a, const Root& b);
Comparator comparator_of(const OrderSpec& spec);

/// Assembles and validates the zones (negative over w, positive over w * w0,
/// a genuine permutation block) without the final window verification.
OrderSpec assemble_order(const CartanData& c, const FiniteWeylElement& w, RowParam negative,
                         ImaginaryOrder imaginary, RowParam positive);

/// Builds and window-verifies the assembled order; throws on invalid parts.
OrderSpec build_order(const CartanData& c, const FiniteWeylElement& w, RowParam negative,
                      ImaginaryOrder imaginary, RowParam positive, Window verify_window);

struct VerifyReport {
    bool ok = true;
    std::string condition;  // "CO(i)" or "CO(ii)" when failed
    Root beta, gamma, sum;
    Int window = 0;
    size_t checked = 0;
    size_t skipped = 0;  // sums that leave the window
};

/// Checks CO(i) and CO(ii) for the order restricted to the window. The
/// ambient window must list every positive root of the ambient set up to the
/// window level; membership in B beyond it is consulted for sums only.
VerifyReport verify_convex_order(const CartanData& c, const Comparator& cmp, const Membership& inB,
                                 const std::vector<Root>& ambient_window, Window w);

/// Splices a convex order on Phi(y) before the y-image of one on B
/// (membership predicate inB, ambient window for verification). Both inputs
/// and the output are window-verified; throws on failure.
Comparator splice_orders(const CartanData& c, const AffineWeylElement& y, const Comparator& on_phi,
                         const Comparator& on_B, const Membership& inB,
                         const std::vector<Root>& ambient_window, Window w);

/// Restriction of a comparator to a subset (comparisons outside throw).
Comparator restrict_order(const Comparator& cmp, const Membership& member);

/// First count elements of the well-ordered initial segment (row 1).
std::vector<Root> enumerate_prefix(const RowOrder& order, Int count);
std::vector<Root> enumerate_prefix(const OrderSpec& spec, Int count);

/// All positive roots of the window sorted by the order.
std::vector<Root> window_listing(const OrderSpec& spec, Window w);

}  // namespace convord
