"""処理ごとの定数モジュールをまとめるパッケージ。"""
