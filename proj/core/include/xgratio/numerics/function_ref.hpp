#pragma once

#include <functional>
#include <memory>
#include <type_traits>
#include <utility>

namespace xgratio::numerics {

template <class Signature>
class FunctionRef;

// Non-owning reference to a callable. The referenced object must outlive
// every call through the FunctionRef.
template <class R, class... Args>
class FunctionRef<R(Args...)> {
 public:
  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, FunctionRef> &&
             std::is_invocable_r_v<R, F&, Args...>)
  FunctionRef(F&& f) noexcept  // NOLINT(google-explicit-constructor)
      : object_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
        thunk_([](void* obj, Args... args) -> R {
          return std::invoke(*static_cast<std::remove_reference_t<F>*>(obj),
                             std::forward<Args>(args)...);
        }) {}

  R operator()(Args... args) const { return thunk_(object_, std::forward<Args>(args)...); }

 private:
  void* object_;
  R (*thunk_)(void*, Args...);
};

}  // namespace xgratio::numerics
