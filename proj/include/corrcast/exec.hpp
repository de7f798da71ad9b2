#pragma once

#include <exception>
#include <mutex>

namespace corrcast {

/// Selects between the OpenMP kernel and its serial reference.
enum class Exec { serial, parallel };

namespace detail {

/// Exceptions may not leave an OpenMP region; the first one is parked here and rethrown.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace detail
}  // namespace corrcast
