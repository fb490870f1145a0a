#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsw {

struct Bar {
  std::int64_t timestamp = 0;  // epoch seconds
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double close = 0.0;
  double volume = 0.0;

  bool valid() const {
    return low <= std::min(open, close) && high >= std::max(open, close) &&
           low <= high && volume >= 0.0;
  }
};

struct BarSeries {
  std::string symbol;
  std::int64_t frame = 60;  // bar period, seconds
  std::vector<Bar> bars;

  std::size_t size() const { return bars.size(); }
  bool empty() const { return bars.empty(); }
};

/// Price combination forming the analyzed base series.
enum class PriceCombo { HalfSumOpenClose, Close, Ohlc4 };

struct BaseSeries {
  std::string symbol;
  PriceCombo combo = PriceCombo::HalfSumOpenClose;
  std::vector<double> values;
};

/// Reads `timestamp,open,high,low,close,volume` CSV rows (header optional).
/// Rows violating bar invariants raise ParseError with the offending line;
/// non-increasing timestamps raise OrderError.
BarSeries load_candles(const std::string& path, const std::string& symbol,
                       std::int64_t frame);

/// Same parser over an in-memory document; `origin` names the source in
/// diagnostics.
BarSeries parse_candles(const std::string& text, const std::string& symbol,
                        std::int64_t frame, const std::string& origin = "<memory>");

BaseSeries base_series(const BarSeries& bars, PriceCombo combo);

double combine_bar(const Bar& bar, PriceCombo combo);

/// Element n is ln(X_{n+1}/X_n); output length = input length - 1.
std::vector<double> log_returns(const std::vector<double>& values);

PriceCombo combo_from_name(const std::string& name);
std::string combo_name(PriceCombo combo);

}  // namespace nsw
