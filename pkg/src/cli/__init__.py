"""コマンドライン(member・enumerate・convert・check・reduce・selftest)の実装。"""
