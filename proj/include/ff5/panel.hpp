#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ff5/month.hpp"

namespace ff5 {

/// One security-month observation. Returns are decimal fractions
/// (0.02 = 2%); percentage units exist only at the report edge.
struct SecurityMonth {
  std::string security_id;
  YearMonth month;
  double monthly_return = 0;  // > -1
  double market_cap = 0;      // > 0, month-end
  bool is_st_pt = false;
  bool is_financial = false;
  YearMonth ipo_month;

  friend bool operator==(const SecurityMonth&, const SecurityMonth&) = default;
};

/// Fiscal-year accounting record. book_equity may be non-positive; such
/// securities are ineligible for B/M sorts that year but stay in the
/// market universe.
struct FundamentalsYear {
  std::string security_id;
  int fiscal_year = 0;
  double book_equity = 0;
  double operating_profitability = 0;
  double total_assets = 0;
  double total_assets_prior = 0;

  friend bool operator==(const FundamentalsYear&, const FundamentalsYear&) = default;
};

/// Monthly risk-free rate over a contiguous month range.
class RiskFreeSeries {
 public:
  RiskFreeSeries() = default;
  RiskFreeSeries(YearMonth first, std::vector<double> rates);

  bool empty() const { return rates_.empty(); }
  YearMonth first_month() const { return first_; }
  YearMonth last_month() const { return first_.plus_months(int(rates_.size()) - 1); }
  bool covers(YearMonth m) const {
    return !empty() && m >= first_ && m <= last_month();
  }
  double at(YearMonth m) const;

  friend bool operator==(const RiskFreeSeries&, const RiskFreeSeries&) = default;

 private:
  YearMonth first_;
  std::vector<double> rates_;
};

/// Immutable monthly stock panel: security-month rows sorted by
/// (security, month), fiscal-year fundamentals, and a risk-free series
/// covering the full month span.
class Panel {
 public:
  Panel(std::vector<SecurityMonth> rows, std::vector<FundamentalsYear> fundamentals,
        RiskFreeSeries risk_free);

  bool empty() const { return rows_.empty(); }
  YearMonth first_month() const;
  YearMonth last_month() const;
  int n_months() const { return months_between(last_month(), first_month()) + 1; }

  const std::vector<SecurityMonth>& rows() const { return rows_; }
  const std::vector<FundamentalsYear>& fundamentals() const { return fundamentals_; }
  const RiskFreeSeries& risk_free() const { return risk_free_; }

  /// nullptr when the security has no record that month.
  const SecurityMonth* find(const std::string& security_id, YearMonth m) const;
  const FundamentalsYear* find_fundamentals(const std::string& security_id,
                                            int fiscal_year) const;
  /// All rows of one month, ordered by security id.
  std::vector<const SecurityMonth*> month_rows(YearMonth m) const;
  /// Sorted unique security ids.
  std::vector<std::string> securities() const;
  std::size_t n_securities() const { return by_security_.size(); }

 private:
  std::vector<SecurityMonth> rows_;              // sorted by (security, month)
  std::vector<FundamentalsYear> fundamentals_;   // sorted by (security, year)
  RiskFreeSeries risk_free_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_security_;  // row ranges
};

struct FilterConfig {
  bool exclude_st_pt = true;
  bool exclude_financial = true;
  bool exclude_recent_ipo = true;
  int ipo_window_months = 6;  // listing month inclusive: keep iff month - ipo >= window
};

struct FilterCounts {
  std::size_t dropped_st_pt = 0;
  std::size_t dropped_financial = 0;
  std::size_t dropped_ipo_window = 0;
  std::size_t surviving_rows = 0;
  std::size_t surviving_securities = 0;
};

/// Loads the three CSV inputs into a validated Panel.
/// Rows with an empty return or market_cap field are dropped singly
/// (count reported via *dropped_incomplete_rows when given).
Panel load_panel(const std::string& returns_path, const std::string& fundamentals_path,
                 const std::string& riskfree_path,
                 std::size_t* dropped_incomplete_rows = nullptr);

/// Pure row selection: a record survives iff it passes every active
/// filter. Fundamentals are retained only for surviving securities.
/// Idempotent; never alters surviving records.
Panel apply_filters(const Panel& panel, const FilterConfig& cfg,
                    FilterCounts* counts = nullptr);

/// Writers for the same schemas load_panel consumes.
void write_returns_csv(const Panel& panel, const std::string& path);
void write_fundamentals_csv(const Panel& panel, const std::string& path);
void write_riskfree_csv(const Panel& panel, const std::string& path);

}  // namespace ff5
