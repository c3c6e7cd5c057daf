"""ログ・パス・例外の共通補助処理をまとめるパッケージ。"""
