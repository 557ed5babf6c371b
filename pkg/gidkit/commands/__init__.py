"""Comandos de la CLI de gidkit"""
